#pragma once

#include <filesystem>
#include <iosfwd>

#include "cctr/config.hpp"

namespace cctr {

enum ExitCode : int {
  kExitOk = 0,
  kExitFatal = 1,
  kExitThreshold = 2,
  kExitParseFailures = 3,
};

/// Records for every class (or method) under config.paths. Returns 2 when a
/// class exceeds fail_threshold, otherwise 3 when some file failed to parse.
int run_analyze(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Distribution table per (group, metric). config.paths are either records
/// files (*.json / *.csv) or sources, which are analysed first.
int run_summarize(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Per-method contribution listing for one source file.
int run_explain(const CliConfig& config, const std::filesystem::path& target, std::ostream& out,
                std::ostream& err);

/// Command-line entry point. Never throws; every path ends in an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cctr
