#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cctr/cctr_score.hpp"

namespace cctr {

/// Glob over '/'-separated paths: `*` and `?` stay within one component,
/// `**` crosses components (`**/` also matches zero directories), and
/// `[...]` / `[!...]` are character classes.
bool glob_match(std::string_view pattern, std::string_view path);

struct SourceFile {
  std::filesystem::path path;
  std::filesystem::path root;
  std::string relative;  // relative to root, '/'-separated
};

struct ScanOptions {
  std::vector<std::string> include{"**/*.java"};
  std::vector<std::string> exclude;
};

/// Files under the roots whose relative path matches an include pattern and
/// no exclude pattern, in lexicographic path order. A root may be a single
/// file. Throws InputError for a missing root.
std::vector<SourceFile> scan(const std::vector<std::filesystem::path>& roots,
                             const ScanOptions& options = {});

/// Maps a file to its group label.
class Labeler {
 public:
  /// First `depth` directory components of the root-relative path; files
  /// with no directory components take the root's own name.
  static Labeler by_depth(int depth);
  /// Ordered `glob -> label` rules; first match on the relative path (or,
  /// failing that, the full path) wins. Unmatched files are "unlabeled".
  static Labeler by_rules(std::vector<std::pair<std::string, std::string>> rules);
  /// Reads `glob<TAB>label` lines; blank lines and `#` comments are skipped.
  static Labeler from_file(const std::filesystem::path& path);

  std::string label(const SourceFile& file) const;

 private:
  int depth_ = 1;
  std::vector<std::pair<std::string, std::string>> rules_;
  bool use_rules_ = false;
};

struct CorpusRecord {
  std::filesystem::path path;
  std::string group_label;
  ClassMetrics class_metrics;
  bool partial = false;
};

struct FailedFile {
  std::filesystem::path path;
  std::string reason;
};

struct CorpusResult {
  std::vector<CorpusRecord> records;  // by path, then class position
  std::vector<FailedFile> failed;     // by path
};

/// Parses and scores every file. Files are analysed by `workers` threads;
/// the result does not depend on the worker count.
CorpusResult analyze_corpus(const std::vector<SourceFile>& files, const Labeler& labeler,
                            const ConstructVocabulary& vocab, const WeightConfig& weights,
                            unsigned workers = 1);

enum class Metric { Cctr, Cognitive, Cyclomatic };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view name);  // throws ConfigError

struct SummaryStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t count = 0;

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

/// Type-7 quantile of ascending `sorted`: linear interpolation at position
/// (count - 1) * q.
double quantile(std::span<const double> sorted, double q);

/// Requires a non-empty input.
SummaryStats summarize_values(std::vector<double> values);

/// One labelled observation of a metric.
struct Sample {
  std::string group;
  double value = 0.0;
};

struct Summary {
  std::map<std::string, SummaryStats> groups;
  std::vector<std::string> warnings;
};

/// Groups listed in `known_groups` without any sample are omitted and
/// reported in `warnings`.
Summary summarize_samples(const std::vector<Sample>& samples,
                          const std::vector<std::string>& known_groups = {});

/// Class-level values by default; method-level with `per_method`.
Summary summarize(const std::vector<CorpusRecord>& records, Metric metric, bool per_method = false);

}  // namespace cctr
