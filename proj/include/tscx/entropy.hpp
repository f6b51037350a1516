#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tscx/series.hpp"

namespace tscx {

enum class ToleranceMode {
  per_input_sd,  // radius = r * sample SD of the series being scored
  absolute,      // radius = r
};

struct SampEnParams {
  std::size_t m = 2;
  double r = 0.2;
  ToleranceMode r_mode = ToleranceMode::per_input_sd;
};

struct SampEnResult {
  double value = 0.0;       // nats
  std::uint64_t a_count = 0;  // template pairs matching at length m + 1
  std::uint64_t b_count = 0;  // template pairs matching at length m
  double radius = 0.0;      // effective tolerance
};

struct MatchCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

/// Pair counts behind sample entropy.
///
/// Templates are the N - m vectors starting at 0 .. N-m-1, for both lengths,
/// so every counted m-match has an (m+1)-extension and a <= b. Two templates
/// match when their Chebyshev distance is <= radius. Only unordered pairs
/// i < j are counted, which excludes self-matches.
///
/// Templates are visited in order of their first coordinate, so only pairs
/// whose first coordinates lie within the radius are compared. The counts are
/// identical to exhaustive enumeration.
MatchCounts sample_entropy_counts(std::span<const double> values, std::size_t m, double radius);

/// Sample entropy -ln(A/B).
///
/// Requires N >= m + 2 and an effective radius > 0; a constant series scored
/// with a per-SD radius therefore fails as a degenerate tolerance. A zero count
/// on either side raises InsufficientMatches rather than returning infinity.
SampEnResult sample_entropy(const Series& series, const SampEnParams& params = {});

struct PermEnParams {
  std::size_t n = 5;
  bool normalize = true;
};

// Shannon entropy (natural log) of the overlapping ordinal-pattern
// distribution; divided by ln(n!) when normalized.
double permutation_entropy(const Series& series, const PermEnParams& params = {});

}  // namespace tscx
