#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tscx/entropy.hpp"
#include "tscx/error.hpp"
#include "tscx/randomness.hpp"
#include "tscx/series.hpp"

namespace tscx {

enum class MetricKind { sampen, permen, permtest, runstest };

inline constexpr MetricKind kAllMetrics[] = {MetricKind::sampen, MetricKind::permen, MetricKind::permtest,
                                             MetricKind::runstest};

std::string_view to_string(MetricKind kind);
MetricKind parse_metric(std::string_view name);

struct MetricSpec {
  MetricKind kind = MetricKind::sampen;
  SampEnParams sampen{};
  PermEnParams permen{};
  std::size_t t = 5;
  RunsVariant runs = RunsVariant::above_below_median;
};

// Uniform output of every metric. Test metrics fill statistic and p_value
// (and df for the chi-square); a failed evaluation carries `error` instead of
// a value.
struct MetricResult {
  std::string name;
  std::optional<double> value;
  std::optional<double> statistic;
  std::optional<double> df;
  std::optional<double> p_value;
  std::vector<std::string> warnings;
  std::optional<std::string> error;
  ErrorKind error_kind = ErrorKind::data;

  bool ok() const noexcept { return !error.has_value(); }
};

// Never throws for data problems; they come back as an error cell.
MetricResult evaluate_metric(const Series& series, const MetricSpec& spec);

enum class SweepTolerance {
  per_scale,         // per-SD radius recomputed from each coarse-grained series
  fixed_from_input,  // radius fixed from the original series' SD
};

struct MseProfile {
  std::vector<std::size_t> scales;
  std::vector<MetricSpec> metrics;
  std::vector<std::vector<MetricResult>> cells;  // [scale index][metric index]

  const MetricResult& at(std::size_t scale_index, std::size_t metric_index) const {
    return cells.at(scale_index).at(metric_index);
  }
};

// Coarse-grains the input at each scale and evaluates every metric on the
// down-sampled series. Scales must be strictly increasing and <= N.
MseProfile mse_sweep(const Series& series, std::span<const std::size_t> scales, std::span<const MetricSpec> metrics,
                     SweepTolerance tolerance = SweepTolerance::per_scale, Remainder remainder = Remainder::discard);

}  // namespace tscx
