#include "cctr/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "cctr/cognitive.hpp"
#include "cctr/error.hpp"
#include "cctr/report.hpp"

namespace cctr {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_weight(double w) {
  if (std::trunc(w) == w) return fmt::format("{:.1f}", w);
  return fmt::format("{}", w);
}

bool is_records_file(const fs::path& p) {
  const auto ext = p.extension();
  return (ext == ".json" || ext == ".csv") && fs::is_regular_file(p);
}

void report_failures(const std::vector<FailedFile>& failed, std::ostream& err) {
  for (const auto& f : failed) {
    err << "cctr: failed to parse " << f.path.generic_string() << ": " << f.reason << '\n';
  }
}

}  // namespace

int run_analyze(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<SourceFile> files;
  if (!config.paths.empty()) files = scan(config.paths, config.scan);
  const CorpusResult result =
      analyze_corpus(files, config.labeler(), config.vocab, config.weights, config.workers);
  const std::vector<ReportRow> rows = to_rows(result.records, config.per_method);
  switch (config.format) {
    case OutputFormat::Json: write_records_json(out, rows, result.failed); break;
    case OutputFormat::Csv: write_records_csv(out, rows); break;
    case OutputFormat::Table: write_records_table(out, rows); break;
  }
  report_failures(result.failed, err);

  if (config.fail_threshold) {
    for (const auto& r : result.records) {
      if (r.class_metrics.class_cctr > *config.fail_threshold) {
        err << "cctr: " << r.class_metrics.class_name << " has CCTR "
            << format_number(r.class_metrics.class_cctr) << ", above the threshold "
            << format_number(*config.fail_threshold) << '\n';
        return kExitThreshold;
      }
    }
  }
  return result.failed.empty() ? kExitOk : kExitParseFailures;
}

int run_summarize(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<ReportRow> rows;
  std::vector<FailedFile> failed;
  const bool from_records = !config.paths.empty() &&
                            std::all_of(config.paths.begin(), config.paths.end(), is_records_file);
  if (from_records) {
    for (const auto& p : config.paths) {
      const std::string text = read_file(p);
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      try {
        auto loaded = p.extension() == ".csv" ? read_records_csv(text) : read_records_json(text);
        rows.insert(rows.end(), loaded.begin(), loaded.end());
      } catch (const InputError& e) {
        throw InputError(p.string() + ": " + e.what());
      }
    }
  } else if (!config.paths.empty()) {
    const auto files = scan(config.paths, config.scan);
    CorpusResult result =
        analyze_corpus(files, config.labeler(), config.vocab, config.weights, config.workers);
    rows = to_rows(result.records, config.per_method);
    failed = std::move(result.failed);
    report_failures(failed, err);
  }
  if (rows.empty()) err << "cctr: warning: no records to summarize\n";

  std::vector<std::string> groups;
  for (const auto& r : rows) groups.push_back(r.group);
  std::map<std::string, std::vector<SummaryRow>> by_group;
  for (Metric metric : config.metrics) {
    std::vector<Sample> samples;
    for (const auto& r : rows) samples.push_back({r.group, r.value(metric)});
    Summary summary = summarize_samples(samples, groups);
    for (const auto& w : summary.warnings) err << "cctr: warning: " << w << '\n';
    for (auto& [group, stats] : summary.groups) by_group[group].push_back({group, metric, stats});
  }
  std::vector<SummaryRow> table;
  for (auto& [group, entries] : by_group) table.insert(table.end(), entries.begin(), entries.end());
  switch (config.format) {
    case OutputFormat::Json: write_summary_json(out, table); break;
    case OutputFormat::Csv: write_summary_csv(out, table); break;
    case OutputFormat::Table: write_summary_table(out, table); break;
  }
  return failed.empty() ? kExitOk : kExitParseFailures;
}

int run_explain(const CliConfig& config, const fs::path& target, std::ostream& out,
                std::ostream& err) {
  const SyntaxUnit unit = parse_source(read_file(target), target);
  if (!unit.ok()) {
    for (const auto& e : unit.parse_errors) {
      err << target.generic_string() << ':' << e.line << ':' << e.column << ": " << e.message
          << '\n';
    }
    return kExitFatal;
  }
  const WeightConfig& w = config.weights;
  bool first = true;
  for (const auto& method : extract_methods(unit)) {
    if (method.nested_in_method) continue;
    const CognitiveScore score = cognitive_complexity(method);
    const ConstructCounts counts = construct_counts(method, config.vocab);
    const double total = score_method(score.total, counts.a, counts.m, counts.t, w);
    if (!first) out << '\n';
    first = false;
    out << method.declaring_class << '.' << method.method_name << " (line "
        << method.span.begin.line << ")\n";
    for (const auto& line : explain(score)) out << "  " << line << '\n';
    out << "  A = " << counts.a << '\n';
    out << "  M = " << counts.m << '\n';
    out << "  T = " << counts.t << '\n';
    out << "  CCTR = " << format_weight(w.alpha) << "·" << score.total << " + "
        << format_weight(w.beta) << "·" << counts.a << " + " << format_weight(w.gamma)
        << "·" << counts.m << " + " << format_weight(w.delta) << "·" << counts.t
        << " = " << format_number(total) << '\n';
  }
  return kExitOk;
}

namespace {

struct RawOptions {
  std::vector<std::string> paths;
  std::string format = "table";
  std::string weights;
  std::string config_file;
  std::vector<std::string> settings;
  bool per_method = false;
  std::optional<int> group_depth;
  std::string label_map;
  std::optional<double> fail_threshold;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> metrics;
  bool pmd_compat = false;
};

void add_common_options(CLI::App& cmd, RawOptions& o) {
  cmd.add_option("paths", o.paths, "Source files or directories (summarize: also records files)");
  cmd.add_option("--format", o.format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd.add_option("--weights", o.weights, "CCTR weights alpha,beta,gamma,delta");
  cmd.add_option("--config", o.config_file, "Key-value config file (default: $CCTR_CONFIG)");
  cmd.add_option("--set", o.settings, "Override one config key: key=value");
  cmd.add_flag("--per-method", o.per_method, "Emit or summarize method-level values");
  cmd.add_option("--group-depth", o.group_depth, "Group by the first N directory components");
  cmd.add_option("--label-map", o.label_map, "Group with glob<TAB>label rules");
  cmd.add_option("--include", o.include, "Include glob (default **/*.java)");
  cmd.add_option("--exclude", o.exclude, "Exclude glob; wins over includes");
  cmd.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd.add_flag("--pmd-compat", o.pmd_compat, "Reserved PMD rule profile (not available)");
}

CliConfig build_config(Command command, const RawOptions& o) {
  if (o.pmd_compat) {
    throw ConfigError("the pmd-compat rule profile is reserved; only the default profile ships");
  }
  CliConfig c;
  c.command = command;
  c.paths.assign(o.paths.begin(), o.paths.end());
  c.format = parse_format(o.format);
  std::string config_file = o.config_file;
  if (config_file.empty()) {
    if (const char* env = std::getenv("CCTR_CONFIG"); env != nullptr) config_file = env;
  }
  if (!config_file.empty()) apply_config_file(config_file, c.weights, c.vocab);
  if (!o.weights.empty()) c.weights = WeightConfig::parse(o.weights);
  for (const auto& s : o.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
    apply_setting(std::string_view(s).substr(0, eq), std::string_view(s).substr(eq + 1), c.weights,
                  c.vocab);
  }
  c.per_method = o.per_method;
  c.group_depth = o.group_depth;
  if (!o.label_map.empty()) c.label_map = o.label_map;
  c.fail_threshold = o.fail_threshold;
  if (!o.include.empty()) c.scan.include = o.include;
  c.scan.exclude = o.exclude;
  c.workers = o.workers;
  if (!o.metrics.empty()) {
    c.metrics.clear();
    for (const auto& m : o.metrics) c.metrics.push_back(parse_metric(m));
  }
  c.validate();
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Test-aware cognitive complexity (CCTR) for JUnit-style test sources"};
  app.name("cctr");
  app.require_subcommand(1);
  RawOptions opts;

  CLI::App* analyze = app.add_subcommand("analyze", "Score every test class (or method)");
  add_common_options(*analyze, opts);
  analyze->add_option("--fail-threshold", opts.fail_threshold,
                      "Exit 2 when any class CCTR exceeds this value");

  CLI::App* summarize = app.add_subcommand("summarize", "Min/Q1/Median/Q3/Max/Mean per group");
  add_common_options(*summarize, opts);
  summarize->add_option("--metric", opts.metrics, "cctr, cognitive or cyclomatic (default: all)")
      ->check(CLI::IsMember({"cctr", "cognitive", "cyclomatic"}));

  CLI::App* explain_cmd = app.add_subcommand("explain", "Show the score breakdown of one file");
  add_common_options(*explain_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (CLI::App* sub : {analyze, summarize, explain_cmd}) {
      if (sub->parsed()) target = sub;
    }
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cctr: " << e.what() << '\n';
    CLI::App* target = &app;
    for (CLI::App* sub : {analyze, summarize, explain_cmd}) {
      if (sub->parsed()) target = sub;
    }
    err << target->help();
    return kExitFatal;
  }

  try {
    if (analyze->parsed()) return run_analyze(build_config(Command::Analyze, opts), out, err);
    if (summarize->parsed()) return run_summarize(build_config(Command::Summarize, opts), out, err);
    const CliConfig config = build_config(Command::Explain, opts);
    if (config.paths.size() != 1) throw ConfigError("explain takes exactly one source file");
    return run_explain(config, config.paths.front(), out, err);
  } catch (const ConfigError& e) {
    err << "cctr: " << e.what() << '\n';
    return kExitFatal;
  } catch (const std::exception& e) {
    err << "cctr: " << e.what() << '\n';
    return kExitFatal;
  }
}

}  // namespace cctr
