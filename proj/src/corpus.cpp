#include "cctr/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "cctr/error.hpp"

namespace cctr {

namespace fs = std::filesystem;

namespace {

bool match_class(std::string_view& pattern, char c) {
  // pattern starts just after '['
  bool negate = false;
  if (!pattern.empty() && (pattern.front() == '!' || pattern.front() == '^')) {
    negate = true;
    pattern.remove_prefix(1);
  }
  bool matched = false;
  bool first = true;
  while (!pattern.empty() && (first || pattern.front() != ']')) {
    first = false;
    char lo = pattern.front();
    pattern.remove_prefix(1);
    char hi = lo;
    if (pattern.size() >= 2 && pattern.front() == '-' && pattern[1] != ']') {
      hi = pattern[1];
      pattern.remove_prefix(2);
    }
    if (lo <= c && c <= hi) matched = true;
  }
  if (!pattern.empty()) pattern.remove_prefix(1);  // ']'
  return matched != negate;
}

bool glob_impl(std::string_view p, std::string_view s) {
  while (!p.empty()) {
    if (p.starts_with("**")) {
      p.remove_prefix(2);
      if (p.starts_with("/")) {
        p.remove_prefix(1);
        if (glob_impl(p, s)) return true;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] == '/' && glob_impl(p, s.substr(i + 1))) return true;
        }
        return false;
      }
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (glob_impl(p, s.substr(i))) return true;
      }
      return false;
    }
    const char c = p.front();
    if (c == '*') {
      p.remove_prefix(1);
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (glob_impl(p, s.substr(i))) return true;
        if (i < s.size() && s[i] == '/') break;
      }
      return false;
    }
    if (s.empty()) return false;
    if (c == '?') {
      if (s.front() == '/') return false;
    } else if (c == '[' && p.find(']', 2) != std::string_view::npos) {
      p.remove_prefix(1);
      if (s.front() == '/' || !match_class(p, s.front())) return false;
      s.remove_prefix(1);
      continue;
    } else if (c != s.front()) {
      return false;
    }
    p.remove_prefix(1);
    s.remove_prefix(1);
  }
  return s.empty();
}

bool any_match(const std::vector<std::string>& patterns, std::string_view path) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const std::string& p) { return glob_match(p, path); });
}

std::string root_name(const fs::path& root) {
  fs::path p = fs::absolute(root).lexically_normal();
  if (!p.has_filename()) p = p.parent_path();
  std::string name = p.filename().generic_string();
  return name.empty() ? "." : name;
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) { return glob_impl(pattern, path); }

std::vector<SourceFile> scan(const std::vector<fs::path>& roots, const ScanOptions& options) {
  std::vector<SourceFile> files;
  auto consider = [&](const fs::path& root, const fs::path& file, std::string relative) {
    if (!any_match(options.include, relative)) return;
    if (any_match(options.exclude, relative)) return;
    files.push_back({file, root, std::move(relative)});
  };
  for (const auto& root : roots) {
    std::error_code ec;
    const auto status = fs::status(root, ec);
    if (ec || !fs::exists(status)) throw InputError("path does not exist: " + root.string());
    if (fs::is_regular_file(status)) {
      const fs::path parent = root.has_parent_path() ? root.parent_path() : fs::path(".");
      consider(parent, root, root.filename().generic_string());
      continue;
    }
    for (auto it = fs::recursive_directory_iterator(
             root, fs::directory_options::skip_permission_denied, ec);
         !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (!it->is_regular_file()) continue;
      consider(root, it->path(), it->path().lexically_relative(root).generic_string());
    }
    if (ec) throw InputError("cannot read directory " + root.string() + ": " + ec.message());
  }
  std::sort(files.begin(), files.end(), [](const SourceFile& a, const SourceFile& b) {
    return a.path.generic_string() < b.path.generic_string();
  });
  files.erase(std::unique(files.begin(), files.end(),
                          [](const SourceFile& a, const SourceFile& b) { return a.path == b.path; }),
              files.end());
  return files;
}

Labeler Labeler::by_depth(int depth) {
  if (depth < 0) throw ConfigError("group depth must be non-negative");
  Labeler l;
  l.depth_ = depth;
  return l;
}

Labeler Labeler::by_rules(std::vector<std::pair<std::string, std::string>> rules) {
  Labeler l;
  l.rules_ = std::move(rules);
  l.use_rules_ = true;
  return l;
}

Labeler Labeler::from_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open label map " + path.string());
  std::vector<std::pair<std::string, std::string>> rules;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'glob<TAB>label'");
    }
    rules.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return by_rules(std::move(rules));
}

std::string Labeler::label(const SourceFile& file) const {
  if (use_rules_) {
    const std::string full = file.path.generic_string();
    for (const auto& [pattern, label] : rules_) {
      if (glob_match(pattern, file.relative) || glob_match(pattern, full)) return label;
    }
    return "unlabeled";
  }
  std::string label;
  std::string_view rest = file.relative;
  for (int i = 0; i < depth_; ++i) {
    const auto slash = rest.find('/');
    if (slash == std::string_view::npos) break;
    if (!label.empty()) label += '/';
    label += rest.substr(0, slash);
    rest.remove_prefix(slash + 1);
  }
  return label.empty() ? root_name(file.root) : label;
}

namespace {

struct FileOutcome {
  std::vector<CorpusRecord> records;
  std::optional<FailedFile> failure;
};

FileOutcome analyze_file(const SourceFile& file, const Labeler& labeler,
                         const ConstructVocabulary& vocab, const WeightConfig& weights) {
  FileOutcome out;
  std::ifstream in(file.path, std::ios::binary);
  if (!in) {
    out.failure = FailedFile{file.path, "cannot open file"};
    return out;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    out.failure = FailedFile{file.path, "read error"};
    return out;
  }
  const std::string text = buffer.str();
  const SyntaxUnit unit = parse_source(text, file.path);
  if (unit.failed()) {
    const auto& e = unit.parse_errors.front();
    out.failure = FailedFile{file.path, std::to_string(e.line) + ":" + std::to_string(e.column) +
                                            ": " + e.message};
    return out;
  }
  const std::string label = labeler.label(file);
  for (auto& cls : analyze_unit(unit, vocab, weights)) {
    out.records.push_back({file.path, label, std::move(cls), unit.partial()});
  }
  return out;
}

}  // namespace

CorpusResult analyze_corpus(const std::vector<SourceFile>& files, const Labeler& labeler,
                            const ConstructVocabulary& vocab, const WeightConfig& weights,
                            unsigned workers) {
  std::vector<FileOutcome> outcomes(files.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(files.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = analyze_file(files[i], labeler, vocab, weights);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  CorpusResult result;
  for (auto& outcome : outcomes) {
    for (auto& r : outcome.records) result.records.push_back(std::move(r));
    if (outcome.failure) result.failed.push_back(std::move(*outcome.failure));
  }
  return result;
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Cctr: return "cctr";
    case Metric::Cognitive: return "cognitive";
    case Metric::Cyclomatic: return "cyclomatic";
  }
  return "?";
}

Metric parse_metric(std::string_view name) {
  if (name == "cctr") return Metric::Cctr;
  if (name == "cognitive") return Metric::Cognitive;
  if (name == "cyclomatic") return Metric::Cyclomatic;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

double quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize_values(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summary of an empty sample");
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;  // ascending order keeps the mean order-independent
  SummaryStats s;
  s.count = values.size();
  s.min = values.front();
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  s.max = values.back();
  s.mean = sum / static_cast<double>(values.size());
  // Rounding in the division can push the mean of equal values past them.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

Summary summarize_samples(const std::vector<Sample>& samples,
                          const std::vector<std::string>& known_groups) {
  std::map<std::string, std::vector<double>> values;
  for (const auto& g : known_groups) values[g];
  for (const auto& s : samples) values[s.group].push_back(s.value);
  Summary out;
  for (auto& [group, vs] : values) {
    if (vs.empty()) {
      out.warnings.push_back("group '" + group + "' has no values; omitted");
      continue;
    }
    out.groups.emplace(group, summarize_values(std::move(vs)));
  }
  return out;
}

Summary summarize(const std::vector<CorpusRecord>& records, Metric metric, bool per_method) {
  std::vector<Sample> samples;
  std::vector<std::string> groups;
  for (const auto& r : records) {
    groups.push_back(r.group_label);
    const ClassMetrics& c = r.class_metrics;
    if (per_method) {
      for (const auto& m : c.methods) {
        const MetricVector& v = m.metrics;
        const double value = metric == Metric::Cctr        ? v.cctr()
                             : metric == Metric::Cognitive ? v.n()
                                                           : v.cyclomatic();
        samples.push_back({r.group_label, value});
      }
    } else {
      const double value = metric == Metric::Cctr        ? c.class_cctr
                           : metric == Metric::Cognitive ? c.total_n()
                                                         : c.total_cyclomatic();
      samples.push_back({r.group_label, value});
    }
  }
  return summarize_samples(samples, groups);
}

}  // namespace cctr
