#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tscx/series.hpp"

namespace tscx {

struct PermutationTestResult {
  double chi_square = 0.0;
  std::size_t df = 0;  // t! - 1
  double p_value = 1.0;
  std::size_t group_count = 0;
  double expected_per_cell = 0.0;
  bool low_expected_warning = false;  // expected_per_cell < 5
  std::vector<std::uint64_t> observed;  // one counter per ordinal pattern
};

inline constexpr double kLowExpectedThreshold = 5.0;

// Chi-square test of uniformity of ordinal patterns over the floor(N/t)
// disjoint groups starting at index 0. The p-value is the upper tail at
// t! - 1 degrees of freedom.
PermutationTestResult permutation_test(const Series& series, std::size_t t = 5);

enum class RunsVariant { above_below_median, up_down };

std::string_view to_string(RunsVariant v);
RunsVariant parse_runs_variant(std::string_view text);

struct RunsTestResult {
  double z = 0.0;
  double p_value = 1.0;  // two-sided
  std::size_t runs = 0;
  std::size_t n_effective = 0;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  RunsVariant variant = RunsVariant::above_below_median;
};

// Wald-Wolfowitz style runs test without continuity correction.
//
// above_below_median: samples equal to the median are dropped and the rest
// are classed as above/below. up_down: signs of consecutive differences,
// zero differences dropped, scored with the runs-up-and-down moments.
// Positive z means more runs than expected under randomness.
RunsTestResult runs_test(const Series& series, RunsVariant variant = RunsVariant::above_below_median);

struct TTestResult {
  double t_statistic = 0.0;
  double df = 0.0;  // Welch-Satterthwaite
  double p_value = 1.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
};

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace tscx
