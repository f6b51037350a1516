#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tscx {

inline constexpr std::size_t kMinPatternLength = 2;
inline constexpr std::size_t kMaxPatternLength = 8;

constexpr std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Index in [0, n!) of the permutation that sorts `window` ascending. Ties keep
// their original order (earlier index ranks first). The index is the Lehmer
// code of that permutation, so the identity (an increasing window) is 0.
std::size_t ordinal_pattern(std::span<const double> window);

enum class Windowing {
  overlapping,  // windows start at 0, 1, 2, ... (N - n + 1 of them)
  disjoint,     // windows start at 0, n, 2n, ... (floor(N / n) of them)
};

// Dense histogram of ordinal patterns of length n, n! counters.
std::vector<std::uint64_t> ordinal_histogram(std::span<const double> values, std::size_t n, Windowing windowing);

}  // namespace tscx
