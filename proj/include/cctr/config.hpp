#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cctr/cctr_score.hpp"
#include "cctr/corpus.hpp"
#include "cctr/test_constructs.hpp"

namespace cctr {

enum class Command { Analyze, Summarize, Explain };
enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(std::string_view name);  // throws ConfigError

struct CliConfig {
  Command command = Command::Analyze;
  std::vector<std::filesystem::path> paths;
  OutputFormat format = OutputFormat::Table;
  WeightConfig weights;
  ConstructVocabulary vocab;
  bool per_method = false;
  std::optional<int> group_depth;
  std::optional<std::filesystem::path> label_map;
  std::optional<double> fail_threshold;
  ScanOptions scan;
  unsigned workers = 1;
  std::vector<Metric> metrics{Metric::Cctr, Metric::Cognitive, Metric::Cyclomatic};

  /// Throws ConfigError when the grouping options conflict, the threshold is
  /// negative, workers is zero, or weights or vocabularies are invalid.
  void validate() const;
  /// The labeler selected by group_depth / label_map (depth 1 if neither).
  Labeler labeler() const;
};

/// Applies one `key = value` setting. Keys: weights.alpha, weights.beta,
/// weights.gamma, weights.delta, vocab.mock_names, vocab.common_annotations,
/// vocab.specialized_annotations, vocab.assertion_extra_names,
/// vocab.assertion_prefixes (comma-separated lists, replacing the defaults
/// except assertion_extra_names, which adds to them) and
/// vocab.specialized_per_occurrence (true/false).
void apply_setting(std::string_view key, std::string_view value, WeightConfig& weights,
                   ConstructVocabulary& vocab);

/// Flat key-value text: one `key = value` per line, `#` comments.
void apply_config_text(std::string_view text, std::string_view origin, WeightConfig& weights,
                       ConstructVocabulary& vocab);
void apply_config_file(const std::filesystem::path& path, WeightConfig& weights,
                       ConstructVocabulary& vocab);

}  // namespace cctr
