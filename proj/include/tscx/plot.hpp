#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tscx/report.hpp"

namespace tscx {

enum class PlotKind {
  line_by_scale,  // metric value against scale factor, one line per label, one panel per metric
  grouped_bars,   // rescaled scores per label, grouped by metric
  box_by_group,   // distribution of values per group (extra column "group"), one panel per metric
};

PlotKind parse_plot_kind(std::string_view text);

struct BoxStats {
  std::size_t n = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double whisker_low = 0.0;   // smallest value >= q1 - 1.5 IQR
  double whisker_high = 0.0;  // largest value <= q3 + 1.5 IQR
  std::vector<double> outliers;
};

// Quartiles by linear interpolation between order statistics (the common
// "type 7" definition); whiskers at 1.5 IQR.
BoxStats box_stats(std::span<const double> values);

// Bar heights for grouped_bars: the chi-square statistic goes through
// 1/ln(x), the runs z through 1/|z|, then every metric is min-max rescaled
// across labels. A metric with a single distinct score draws at full height.
std::vector<double> plot_scores(std::string_view metric, std::span<const double> raw);

// Deterministic self-contained SVG. Throws Error(usage) when the report has
// no rows usable for the requested kind.
std::string render_plot(const ExperimentReport& report, PlotKind kind);
void write_plot(const ExperimentReport& report, PlotKind kind, const std::filesystem::path& path);

}  // namespace tscx
