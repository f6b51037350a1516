#include "tscx/randomness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tscx/error.hpp"
#include "tscx/ordinal.hpp"
#include "tscx/special.hpp"

namespace tscx {

PermutationTestResult permutation_test(const Series& series, std::size_t t) {
  if (t < kMinPatternLength || t > kMaxPatternLength) {
    throw Error(ErrorKind::usage, "group size t must lie in [2, 8], got " + std::to_string(t));
  }
  if (series.size() < t) throw Error(ErrorKind::data, "no complete group");

  PermutationTestResult out;
  out.observed = ordinal_histogram(series.values(), t, Windowing::disjoint);
  const std::uint64_t categories = factorial(t);
  const std::uint64_t groups = series.size() / t;
  out.group_count = groups;
  out.df = categories - 1;
  out.expected_per_cell = static_cast<double>(groups) / static_cast<double>(categories);
  out.low_expected_warning = out.expected_per_cell < kLowExpectedThreshold;

  // sum (O - E)^2 / E with E = G / t!  ==  (t! * sum O^2 - G^2) / G, kept in
  // integers until the final division.
  std::uint64_t sum_sq = 0;
  for (std::uint64_t o : out.observed) sum_sq += o * o;
  const std::uint64_t numerator = categories * sum_sq - groups * groups;
  out.chi_square = static_cast<double>(numerator) / static_cast<double>(groups);
  out.p_value = chi_square_sf(out.chi_square, static_cast<double>(out.df));
  return out;
}

std::string_view to_string(RunsVariant v) {
  return v == RunsVariant::above_below_median ? "above_below_median" : "up_down";
}

RunsVariant parse_runs_variant(std::string_view text) {
  if (text == "above_below_median" || text == "median") return RunsVariant::above_below_median;
  if (text == "up_down" || text == "updown") return RunsVariant::up_down;
  throw Error(ErrorKind::usage, "unknown runs variant '" + std::string(text) + "'");
}

namespace {

double median_of(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return (lower + upper) / 2.0;
}

std::size_t count_runs(const std::vector<bool>& signs) {
  std::size_t runs = signs.empty() ? 0 : 1;
  for (std::size_t i = 1; i < signs.size(); ++i) {
    if (signs[i] != signs[i - 1]) ++runs;
  }
  return runs;
}

}  // namespace

RunsTestResult runs_test(const Series& series, RunsVariant variant) {
  RunsTestResult out;
  out.variant = variant;
  const auto x = series.values();

  std::vector<bool> signs;
  signs.reserve(x.size());
  if (variant == RunsVariant::above_below_median) {
    const double med = median_of(x);
    for (double v : x) {
      if (v != med) signs.push_back(v > med);
    }
  } else {
    for (std::size_t i = 1; i < x.size(); ++i) {
      const double d = x[i] - x[i - 1];
      if (d != 0.0) signs.push_back(d > 0.0);
    }
  }
  if (signs.empty()) throw Error(ErrorKind::data, "degenerate series");

  out.n_effective = signs.size();
  out.n_positive = static_cast<std::size_t>(std::count(signs.begin(), signs.end(), true));
  out.n_negative = out.n_effective - out.n_positive;
  out.runs = count_runs(signs);

  double mean = 0.0;
  double var = 0.0;
  const double n = static_cast<double>(out.n_effective);
  if (variant == RunsVariant::above_below_median) {
    const double n1 = static_cast<double>(out.n_positive);
    const double n2 = static_cast<double>(out.n_negative);
    const double prod = 2.0 * n1 * n2;
    mean = prod / n + 1.0;
    var = n > 1.0 ? prod * (prod - n) / (n * n * (n - 1.0)) : 0.0;
  } else {
    // n retained differences come from n + 1 observations.
    const double obs = n + 1.0;
    mean = (2.0 * obs - 1.0) / 3.0;
    var = n >= 2.0 ? (16.0 * obs - 29.0) / 90.0 : 0.0;
  }
  if (!(var > 0.0)) throw Error(ErrorKind::data, "sample too small");

  out.z = (static_cast<double>(out.runs) - mean) / std::sqrt(var);
  out.p_value = std::min(1.0, 2.0 * normal_sf(std::abs(out.z)));
  return out;
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw Error(ErrorKind::usage, "welch t-test needs at least two values per group");
  const SummaryStats sa = summary(a);
  const SummaryStats sb = summary(b);
  if (!(sa.sd > 0.0) || !(sb.sd > 0.0)) throw Error(ErrorKind::data, "degenerate variance in t-test group");

  TTestResult out;
  out.mean_a = sa.mean;
  out.mean_b = sb.mean;
  const double va = sa.sd * sa.sd / static_cast<double>(a.size());
  const double vb = sb.sd * sb.sd / static_cast<double>(b.size());
  const double se2 = va + vb;
  out.t_statistic = (sa.mean - sb.mean) / std::sqrt(se2);
  out.df = se2 * se2 /
           (va * va / static_cast<double>(a.size() - 1) + vb * vb / static_cast<double>(b.size() - 1));
  out.p_value = std::min(1.0, 2.0 * student_t_sf(std::abs(out.t_statistic), out.df));
  return out;
}

}  // namespace tscx
