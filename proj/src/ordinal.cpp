#include "tscx/ordinal.hpp"

#include <array>
#include <string>

#include "tscx/error.hpp"

namespace tscx {

std::size_t ordinal_pattern(std::span<const double> window) {
  const std::size_t n = window.size();
  if (n < 1 || n > kMaxPatternLength) {
    throw Error(ErrorKind::usage, "pattern length " + std::to_string(n) + " outside [1, 8]");
  }

  // Stable insertion sort of indices; strict < keeps equal values in index order.
  std::array<std::size_t, kMaxPatternLength> order{};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i;
    while (j > 0 && window[i] < window[order[j - 1]]) {
      order[j] = order[j - 1];
      --j;
    }
    order[j] = i;
  }

  std::size_t code = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t smaller_after = 0;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (order[j] < order[k]) ++smaller_after;
    }
    code = code * (n - k) + smaller_after;
  }
  return code;
}

std::vector<std::uint64_t> ordinal_histogram(std::span<const double> values, std::size_t n, Windowing windowing) {
  if (n < kMinPatternLength || n > kMaxPatternLength) {
    throw Error(ErrorKind::usage, "pattern length must lie in [2, 8], got " + std::to_string(n));
  }
  std::vector<std::uint64_t> counts(factorial(n), 0);
  if (values.size() < n) return counts;

  const std::size_t step = windowing == Windowing::overlapping ? 1 : n;
  for (std::size_t start = 0; start + n <= values.size(); start += step) {
    ++counts[ordinal_pattern(values.subspan(start, n))];
  }
  return counts;
}

}  // namespace tscx
