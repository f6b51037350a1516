#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tscx/metrics.hpp"
#include "tscx/report.hpp"
#include "tscx/series.hpp"

namespace tscx {

// Parameters shared by every command. Defaults: m = 2, r = 0.2 SD, n = 5,
// t = 5, scales {1,2,3,4,5,10}, median runs test, 30 replications.
struct AnalysisConfig {
  std::vector<MetricKind> metrics{std::begin(kAllMetrics), std::end(kAllMetrics)};
  std::size_t m = 2;
  double r_factor = 0.2;
  std::size_t n = 5;
  std::size_t t = 5;
  RunsVariant runs_variant = RunsVariant::above_below_median;
  std::vector<std::size_t> scales{1, 2, 3, 4, 5, 10};
  std::uint64_t seed = 20240101;
  std::size_t replications = 30;
  SweepTolerance tolerance = SweepTolerance::per_scale;
  Remainder remainder = Remainder::discard;

  void validate() const;
  std::vector<MetricSpec> metric_specs() const;
};

// Scale-1 evaluation of every configured metric on every input.
ExperimentReport analyze(std::span<const Series> inputs, const AnalysisConfig& config);

// Multi-scale sweep of every configured metric on every input; rows keyed by
// scale.
ExperimentReport mse(std::span<const Series> inputs, const AnalysisConfig& config);

/// Scores every series of both groups, then per metric a Welch t-test of the
/// group A scores against the group B scores.
///
/// Rows: one per (series, metric) labelled "<group>:<series label>" with an
/// extra "group" column; one "welch" row per metric (value = t statistic,
/// extra mean_a/mean_b); one "box:<group>" row per group and metric (value =
/// median, extras q1, q3, whisker_low, whisker_high, mean, n).
ExperimentReport compare_groups(std::span<const Series> group_a, std::span<const Series> group_b,
                                const AnalysisConfig& config, const std::string& name_a = "A",
                                const std::string& name_b = "B");

}  // namespace tscx
