#include "tscx/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "tscx/error.hpp"
#include "tscx/ordinal.hpp"

namespace tscx {

MatchCounts sample_entropy_counts(std::span<const double> x, std::size_t m, double radius) {
  if (m < 1) throw Error(ErrorKind::usage, "embedding length m must be >= 1");
  MatchCounts counts;
  if (x.size() < m + 2) return counts;

  const std::size_t templates = x.size() - m;
  std::vector<std::size_t> order(templates);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  for (std::size_t p = 0; p < templates; ++p) {
    const std::size_t i = order[p];
    for (std::size_t q = p + 1; q < templates; ++q) {
      const std::size_t j = order[q];
      if (x[j] - x[i] > radius) break;
      bool match = true;
      for (std::size_t k = 1; k < m; ++k) {
        if (std::abs(x[i + k] - x[j + k]) > radius) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      ++counts.b;
      if (std::abs(x[i + m] - x[j + m]) <= radius) ++counts.a;
    }
  }
  return counts;
}

SampEnResult sample_entropy(const Series& series, const SampEnParams& params) {
  if (params.m < 1) throw Error(ErrorKind::usage, "embedding length m must be >= 1");
  if (series.size() < params.m + 2) {
    throw Error(ErrorKind::data, "series of length " + std::to_string(series.size()) +
                                     " too short for m=" + std::to_string(params.m) + " (need m + 2)");
  }
  if (!(params.r > 0.0) || !std::isfinite(params.r)) {
    throw Error(ErrorKind::usage, "degenerate tolerance: r must be > 0");
  }

  SampEnResult out;
  out.radius = params.r_mode == ToleranceMode::absolute ? params.r : params.r * summary(series).sd;
  if (!(out.radius > 0.0)) throw Error(ErrorKind::data, "degenerate tolerance: r = 0 (constant series)");

  const MatchCounts counts = sample_entropy_counts(series.values(), params.m, out.radius);
  out.a_count = counts.a;
  out.b_count = counts.b;
  if (counts.a == 0 || counts.b == 0) throw InsufficientMatches(counts.a, counts.b);
  out.value = -std::log(static_cast<double>(counts.a) / static_cast<double>(counts.b));
  // -log(1) is -0.0; report a clean zero.
  if (out.value == 0.0) out.value = 0.0;
  return out;
}

double permutation_entropy(const Series& series, const PermEnParams& params) {
  if (params.n < kMinPatternLength || params.n > kMaxPatternLength) {
    throw Error(ErrorKind::usage, "tuple size n must lie in [2, 8], got " + std::to_string(params.n));
  }
  if (series.size() < params.n) throw Error(ErrorKind::data, "series shorter than tuple");

  const auto counts = ordinal_histogram(series.values(), params.n, Windowing::overlapping);
  const double windows = static_cast<double>(series.size() - params.n + 1);
  double h = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / windows;
    h -= p * std::log(p);
  }
  if (h <= 0.0) return 0.0;
  if (!params.normalize) return h;
  return std::min(1.0, h / std::log(static_cast<double>(factorial(params.n))));
}

}  // namespace tscx
