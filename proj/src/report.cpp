#include "cctr/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <json.hpp>

#include "cctr/error.hpp"

namespace cctr {

using ordered_json = nlohmann::ordered_json;

double ReportRow::value(Metric metric) const {
  switch (metric) {
    case Metric::Cctr: return cctr;
    case Metric::Cognitive: return n;
    case Metric::Cyclomatic: return cyclomatic;
  }
  return 0.0;
}

std::vector<ReportRow> to_rows(const std::vector<CorpusRecord>& records, bool per_method) {
  std::vector<ReportRow> rows;
  for (const auto& r : records) {
    const ClassMetrics& c = r.class_metrics;
    if (per_method) {
      for (const auto& m : c.methods) {
        const MetricVector& v = m.metrics;
        rows.push_back({r.path.generic_string(), r.group_label, c.class_name, m.method, m.line,
                        v.n(), v.a(), v.m(), v.t(), v.cyclomatic(), v.cctr(), r.partial});
      }
    } else {
      rows.push_back({r.path.generic_string(), r.group_label, c.class_name, std::nullopt, c.line,
                      c.total_n(), c.total_a(), c.total_m(), c.total_t(), c.total_cyclomatic(),
                      c.class_cctr, r.partial});
    }
  }
  return rows;
}

namespace {

bool is_whole(double v) { return std::isfinite(v) && std::trunc(v) == v && std::fabs(v) < 1e15; }

ordered_json number_json(double v) {
  if (is_whole(v)) return static_cast<long long>(v);
  return v;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& table,
                   std::size_t left_aligned_columns) {
  if (table.empty()) return;
  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      const std::size_t pad = widths[i] - row[i].size();
      if (i < left_aligned_columns) {
        line += row[i];
        if (i + 1 < row.size()) line.append(pad, ' ');
      } else {
        line.append(pad, ' ');
        line += row[i];
      }
    }
    os << line << '\n';
  }
}

}  // namespace

std::string format_number(double value) {
  if (is_whole(value)) return fmt::format("{:.0f}", value);
  return fmt::format("{}", value);
}

std::string format_mean(double value) { return fmt::format("{:.2f}", value); }

void write_records_json(std::ostream& os, const std::vector<ReportRow>& rows,
                        const std::vector<FailedFile>& failed) {
  ordered_json doc;
  doc["schema"] = kRecordSchemaVersion;
  ordered_json records = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["path"] = r.path;
    j["group"] = r.group;
    j["class"] = r.class_name;
    if (r.method) j["method"] = *r.method;
    j["line"] = r.line;
    j["n"] = r.n;
    j["a"] = r.a;
    j["m"] = r.m;
    j["t"] = r.t;
    j["cyclomatic"] = r.cyclomatic;
    j["cctr"] = number_json(r.cctr);
    j["partial"] = r.partial;
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  ordered_json failures = ordered_json::array();
  for (const auto& f : failed) {
    failures.push_back({{"path", f.path.generic_string()}, {"reason", f.reason}});
  }
  doc["failed"] = std::move(failures);
  os << doc.dump(2) << '\n';
}

void write_records_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "path,group,class,method,line,n,a,m,t,cyclomatic,cctr,partial\n";
  for (const auto& r : rows) {
    os << csv_field(r.path) << ',' << csv_field(r.group) << ',' << csv_field(r.class_name) << ','
       << csv_field(r.method.value_or("")) << ',' << r.line << ',' << r.n << ',' << r.a << ','
       << r.m << ',' << r.t << ',' << r.cyclomatic << ',' << format_number(r.cctr) << ','
       << (r.partial ? "true" : "false") << '\n';
  }
}

void write_records_table(std::ostream& os, const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"group", "class", "method", "line", "N", "A", "M", "T", "CC", "CCTR", "partial"});
  for (const auto& r : rows) {
    table.push_back({r.group, r.class_name, r.method.value_or("-"), std::to_string(r.line),
                     std::to_string(r.n), std::to_string(r.a), std::to_string(r.m),
                     std::to_string(r.t), std::to_string(r.cyclomatic), format_number(r.cctr),
                     r.partial ? "yes" : "no"});
  }
  write_aligned(os, table, 3);
}

namespace {

ReportRow row_from_json(const nlohmann::json& j, std::size_t index) {
  try {
    ReportRow r;
    r.path = j.at("path").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.class_name = j.at("class").get<std::string>();
    if (j.contains("method")) r.method = j.at("method").get<std::string>();
    r.line = j.at("line").get<int>();
    r.n = j.at("n").get<int>();
    r.a = j.at("a").get<int>();
    r.m = j.at("m").get<int>();
    r.t = j.at("t").get<int>();
    r.cyclomatic = j.at("cyclomatic").get<int>();
    r.cctr = j.at("cctr").get<double>();
    r.partial = j.value("partial", false);
    if (r.group.empty()) throw InputError("empty group");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("record " + std::to_string(index) + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError("record " + std::to_string(index) + ": " + e.what());
  }
}

}  // namespace

std::vector<ReportRow> read_records_json(std::string_view text) {
  // A zero-byte file holds no records, same as a header-less CSV.
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array()) {
    throw InputError("expected an object with a \"records\" array");
  }
  if (doc.contains("schema") && doc["schema"] != kRecordSchemaVersion) {
    throw InputError("unsupported records schema " + doc["schema"].dump());
  }
  std::vector<ReportRow> rows;
  const auto& records = doc["records"];
  for (std::size_t i = 0; i < records.size(); ++i) rows.push_back(row_from_json(records[i], i));
  return rows;
}

std::vector<ReportRow> read_records_csv(std::string_view text) {
  auto table = parse_csv(text);
  if (table.empty()) return {};
  std::vector<ReportRow> rows;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& f = table[i];
    if (f.size() != 12) throw InputError("CSV line " + std::to_string(i + 1) + ": expected 12 fields");
    try {
      ReportRow r;
      r.path = f[0];
      r.group = f[1];
      r.class_name = f[2];
      if (!f[3].empty()) r.method = f[3];
      r.line = std::stoi(f[4]);
      r.n = std::stoi(f[5]);
      r.a = std::stoi(f[6]);
      r.m = std::stoi(f[7]);
      r.t = std::stoi(f[8]);
      r.cyclomatic = std::stoi(f[9]);
      r.cctr = std::stod(f[10]);
      r.partial = f[11] == "true";
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw InputError("CSV line " + std::to_string(i + 1) + ": invalid number");
    }
  }
  return rows;
}

void write_summary_table(std::ostream& os, const std::vector<SummaryRow>& rows) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"group", "metric", "Min", "Q1", "Median", "Q3", "Max", "Mean"});
  for (const auto& r : rows) {
    const SummaryStats& s = r.stats;
    table.push_back({r.group, std::string(to_string(r.metric)), format_number(s.min),
                     format_number(s.q1), format_number(s.median), format_number(s.q3),
                     format_number(s.max), format_mean(s.mean)});
  }
  write_aligned(os, table, 2);
}

void write_summary_json(std::ostream& os, const std::vector<SummaryRow>& rows) {
  ordered_json doc;
  doc["schema"] = kRecordSchemaVersion;
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    const SummaryStats& s = r.stats;
    out.push_back({{"group", r.group},
                   {"metric", std::string(to_string(r.metric))},
                   {"count", s.count},
                   {"min", number_json(s.min)},
                   {"q1", number_json(s.q1)},
                   {"median", number_json(s.median)},
                   {"q3", number_json(s.q3)},
                   {"max", number_json(s.max)},
                   {"mean", number_json(s.mean)}});
  }
  doc["summary"] = std::move(out);
  os << doc.dump(2) << '\n';
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "group,metric,count,min,q1,median,q3,max,mean\n";
  for (const auto& r : rows) {
    const SummaryStats& s = r.stats;
    os << csv_field(r.group) << ',' << to_string(r.metric) << ',' << s.count << ','
       << format_number(s.min) << ',' << format_number(s.q1) << ',' << format_number(s.median)
       << ',' << format_number(s.q3) << ',' << format_number(s.max) << ',' << format_mean(s.mean)
       << '\n';
  }
}

}  // namespace cctr
