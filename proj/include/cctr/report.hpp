#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cctr/corpus.hpp"

namespace cctr {

inline constexpr int kRecordSchemaVersion = 1;

/// One emitted record: a class, or a method when `method` is set.
struct ReportRow {
  std::string path;
  std::string group;
  std::string class_name;
  std::optional<std::string> method;
  int line = 0;
  int n = 0;
  int a = 0;
  int m = 0;
  int t = 0;
  int cyclomatic = 0;
  double cctr = 0.0;
  bool partial = false;

  double value(Metric metric) const;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

std::vector<ReportRow> to_rows(const std::vector<CorpusRecord>& records, bool per_method);

/// Whole numbers without a decimal point, otherwise the shortest
/// representation that round-trips.
std::string format_number(double value);
/// Two decimals.
std::string format_mean(double value);

// Record schema: {"schema": 1, "records": [{path, group, class, method?,
// line, n, a, m, t, cyclomatic, cctr, partial}], "failed": [{path, reason}]}.
void write_records_json(std::ostream& os, const std::vector<ReportRow>& rows,
                        const std::vector<FailedFile>& failed);
/// Header row, then one line per record in schema order; `method` is empty
/// for class records.
void write_records_csv(std::ostream& os, const std::vector<ReportRow>& rows);
void write_records_table(std::ostream& os, const std::vector<ReportRow>& rows);

/// Parses a records document. Throws InputError naming the byte offset of a
/// syntax error or the offending record.
std::vector<ReportRow> read_records_json(std::string_view text);
std::vector<ReportRow> read_records_csv(std::string_view text);

struct SummaryRow {
  std::string group;
  Metric metric = Metric::Cctr;
  SummaryStats stats;
};

/// Columns: group, metric, Min, Q1, Median, Q3, Max, Mean.
void write_summary_table(std::ostream& os, const std::vector<SummaryRow>& rows);
void write_summary_json(std::ostream& os, const std::vector<SummaryRow>& rows);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

}  // namespace cctr
