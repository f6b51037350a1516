#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tscx {

// An index-ordered univariate series. Every sample is finite and there is at
// least one of them; the constructor enforces both.
class Series {
 public:
  explicit Series(std::vector<double> values, std::string label = {});

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::string& label() const noexcept { return label_; }

  Series with_label(std::string label) const { return Series(values_, std::move(label)); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<double> values_;
  std::string label_;
};

enum class SdDivisor { population, sample };

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
  SdDivisor divisor = SdDivisor::sample;
};

// Mean, SD, min and max in a single pass (Welford). The SD uses divisor n-1
// by default; a one-sample series has sd 0 under either divisor.
SummaryStats summary(std::span<const double> values, SdDivisor divisor = SdDivisor::sample);
inline SummaryStats summary(const Series& s, SdDivisor divisor = SdDivisor::sample) {
  return summary(s.values(), divisor);
}

enum class Remainder {
  discard,  // output length floor(N / scale)
  average,  // a short final block is averaged over the samples it has
};

// Replace each disjoint block of `scale` consecutive samples by its mean.
// By default the trailing remainder is dropped.
Series coarse_grain(const Series& series, std::size_t scale, Remainder remainder = Remainder::discard);

enum class RescaleKind { minmax, inv_ln, inv_abs };

// Plot-space transforms: minmax maps onto [0,1] across the given set,
// inv_ln is 1/ln(s) for chi-square statistics, inv_abs is 1/|s| for runs z.
std::vector<double> rescale_for_plot(std::span<const double> scores, RescaleKind kind);

}  // namespace tscx
