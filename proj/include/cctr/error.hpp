#pragma once

#include <stdexcept>

namespace cctr {

/// Invalid weights, vocabularies, configuration files or command lines.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unusable input: missing scan roots, malformed records files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cctr
