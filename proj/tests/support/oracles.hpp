#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library's numeric code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

namespace oracle {

struct PairCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

// All unordered template pairs among the first N - m starts.
inline PairCounts sampen_pairs(std::span<const double> x, std::size_t m, double r) {
  PairCounts c;
  if (x.size() < m + 2) return c;
  const std::size_t starts = x.size() - m;
  for (std::size_t i = 0; i < starts; ++i) {
    for (std::size_t j = i + 1; j < starts; ++j) {
      double d = 0.0;
      for (std::size_t k = 0; k < m; ++k) d = std::max(d, std::abs(x[i + k] - x[j + k]));
      if (d > r) continue;
      ++c.b;
      if (std::max(d, std::abs(x[i + m] - x[j + m])) <= r) ++c.a;
    }
  }
  return c;
}

// Position of the window's sorting permutation (ties by position) among all n!
// permutations in lexicographic order.
inline std::size_t pattern_rank(std::span<const double> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b] || (w[a] == w[b] && a < b); });

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t position = 0;
  do {
    if (perm == idx) return position;
    ++position;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return position;
}

inline std::map<std::size_t, std::uint64_t> pattern_counts(std::span<const double> x, std::size_t n, std::size_t step) {
  std::map<std::size_t, std::uint64_t> counts;
  for (std::size_t s = 0; s + n <= x.size(); s += step) ++counts[pattern_rank(x.subspan(s, n))];
  return counts;
}

// Composite Simpson rule with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, std::size_t panels = 200000) {
  if (panels % 2) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < panels; ++i) sum += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

inline double normal_upper_tail(double z) { return simpson(normal_pdf, z, z + 40.0); }

// Upper chi-square tail. Substituting t = u^2 removes the df = 1 singularity.
inline double chi_square_upper_tail(double x, double df) {
  const double k = df / 2.0;
  const double norm = std::exp(-std::lgamma(k) - k * std::log(2.0));
  auto integrand = [&](double u) {
    const double t = u * u;
    return 2.0 * u * norm * std::pow(t, k - 1.0) * std::exp(-t / 2.0);
  };
  const double hi = std::sqrt(x + 40.0 * std::sqrt(2.0 * df) + 200.0);
  return simpson(integrand, std::sqrt(x), hi);
}

// Upper Student-t tail via 1/2 minus the integral from 0.
inline double student_upper_tail(double t, double df) {
  const double norm = std::exp(std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0)) / std::sqrt(df * std::numbers::pi);
  auto pdf = [&](double x) { return norm * std::pow(1.0 + x * x / df, -(df + 1.0) / 2.0); };
  return 0.5 - simpson(pdf, 0.0, t);
}

inline double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sample_variance(std::span<const double> v) {
  const double mu = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace oracle
