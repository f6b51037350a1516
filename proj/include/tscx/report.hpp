#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tscx/metrics.hpp"

namespace tscx {

// Extra (non-schema) column value: empty, number or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct ReportRow {
  std::string label;
  std::size_t scale = 1;
  std::string metric;
  std::optional<double> value;
  std::optional<double> statistic;
  std::optional<double> df;
  std::optional<double> p_value;
  std::vector<std::string> warnings;
  std::map<std::string, Cell> extra;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Table of metric results keyed by (label, scale, metric).
///
/// The first eight columns are fixed: label, scale, metric, value, statistic,
/// df, p_value, warnings. Experiments may append extra columns (plot
/// transforms, reference values, pass/fail status); they follow the fixed
/// columns in the order they were registered.
class ExperimentReport {
 public:
  static constexpr std::string_view kColumns[] = {"label", "scale", "metric", "value",
                                                  "statistic", "df", "p_value", "warnings"};

  // Throws Error(usage) on a duplicate key.
  void add(ReportRow row);
  ReportRow& add_result(const std::string& label, std::size_t scale, const MetricResult& result);

  void add_column(const std::string& name);
  const std::vector<std::string>& extra_columns() const noexcept { return extra_columns_; }

  std::span<const ReportRow> rows() const noexcept { return rows_; }
  std::span<ReportRow> rows() noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t size() const noexcept { return rows_.size(); }

  const ReportRow* find(std::string_view label, std::size_t scale, std::string_view metric) const;

  // Appends all rows and columns of `other`.
  void merge(const ExperimentReport& other);

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;

 private:
  std::vector<std::string> extra_columns_;
  std::vector<ReportRow> rows_;
};

// Leading warning of a failed cell: "error: ..." for data errors,
// "usage error: ..." and "numerical error: ..." otherwise.
std::string error_warning(ErrorKind kind, std::string_view message);
std::optional<ErrorKind> row_error(const ReportRow& row);

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view text);

// CSV numbers use 6 significant digits; JSON numbers round-trip exactly.
std::string render_report(const ExperimentReport& report, ReportFormat format);
void write_report(const ExperimentReport& report, ReportFormat format, const std::filesystem::path& path);

ExperimentReport parse_report_json(std::string_view text);
ExperimentReport parse_report_csv(std::string_view text);
ExperimentReport read_report(const std::filesystem::path& path);

}  // namespace tscx
