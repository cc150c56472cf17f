#include "cctr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cctr/error.hpp"

namespace cctr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::set<std::string> parse_list(std::string_view value) {
  std::set<std::string> out;
  while (true) {
    const auto comma = value.find(',');
    const std::string_view item = trim(value.substr(0, comma));
    if (!item.empty()) out.emplace(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

double parse_weight(std::string_view key, std::string_view value) {
  double w = 0.0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), w);
  if (value.empty() || ec != std::errc{} || end != value.data() + value.size() || !std::isfinite(w) ||
      w < 0.0) {
    throw ConfigError(std::string(key) + ": invalid weight '" + std::string(value) + "'");
  }
  return w;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown format '" + std::string(name) + "'");
}

void CliConfig::validate() const {
  if (group_depth && label_map) throw ConfigError("--group-depth and --label-map are exclusive");
  if (group_depth && *group_depth < 0) throw ConfigError("--group-depth must be non-negative");
  if (fail_threshold && !(*fail_threshold >= 0.0)) {
    throw ConfigError("--fail-threshold must be non-negative");
  }
  if (workers == 0) throw ConfigError("--workers must be positive");
  weights.validate();
  vocab.validate();
}

Labeler CliConfig::labeler() const {
  if (label_map) return Labeler::from_file(*label_map);
  return Labeler::by_depth(group_depth.value_or(1));
}

void apply_setting(std::string_view key, std::string_view value, WeightConfig& weights,
                   ConstructVocabulary& vocab) {
  key = trim(key);
  value = trim(value);
  if (key == "weights.alpha") {
    weights.alpha = parse_weight(key, value);
  } else if (key == "weights.beta") {
    weights.beta = parse_weight(key, value);
  } else if (key == "weights.gamma") {
    weights.gamma = parse_weight(key, value);
  } else if (key == "weights.delta") {
    weights.delta = parse_weight(key, value);
  } else if (key == "vocab.mock_names") {
    vocab.mock_names = parse_list(value);
  } else if (key == "vocab.common_annotations") {
    vocab.common_annotations = parse_list(value);
  } else if (key == "vocab.specialized_annotations") {
    vocab.specialized_annotations = parse_list(value);
  } else if (key == "vocab.assertion_extra_names") {
    vocab.assertion_names.merge(parse_list(value));
  } else if (key == "vocab.assertion_prefixes") {
    vocab.assertion_prefixes = parse_list(value);
  } else if (key == "vocab.specialized_per_occurrence") {
    if (value == "true") {
      vocab.specialized_per_occurrence = true;
    } else if (value == "false") {
      vocab.specialized_per_occurrence = false;
    } else {
      throw ConfigError(std::string(key) + ": expected true or false");
    }
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

void apply_config_text(std::string_view text, std::string_view origin, WeightConfig& weights,
                       ConstructVocabulary& vocab) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    try {
      apply_setting(line.substr(0, eq), line.substr(eq + 1), weights, vocab);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(const std::filesystem::path& path, WeightConfig& weights,
                       ConstructVocabulary& vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(buffer.str(), path.string(), weights, vocab);
}

}  // namespace cctr
