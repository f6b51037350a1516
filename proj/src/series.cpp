#include "tscx/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tscx/error.hpp"

namespace tscx {

Series::Series(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw Error(ErrorKind::data, "empty input");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorKind::data, "non-finite sample at index " + std::to_string(i));
    }
  }
}

SummaryStats summary(std::span<const double> values, SdDivisor divisor) {
  if (values.empty()) throw Error(ErrorKind::data, "empty input");

  SummaryStats out;
  out.divisor = divisor;
  out.min = values.front();
  out.max = values.front();
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (double x : values) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
    out.min = std::min(out.min, x);
    out.max = std::max(out.max, x);
  }
  out.n = n;
  // Welford's running mean can drift by an ulp outside [min, max] on
  // constant input.
  out.mean = std::clamp(mean, out.min, out.max);
  const double denom = divisor == SdDivisor::sample ? static_cast<double>(n) - 1.0 : static_cast<double>(n);
  out.sd = (n < 2) ? 0.0 : std::sqrt(std::max(0.0, m2) / denom);
  return out;
}

Series coarse_grain(const Series& series, std::size_t scale, Remainder remainder) {
  if (scale < 1 || scale > series.size()) {
    throw Error(ErrorKind::usage, "invalid scale " + std::to_string(scale) + " for series of length " +
                                      std::to_string(series.size()));
  }
  if (scale == 1) return series;

  const auto x = series.values();
  const std::size_t blocks = x.size() / scale;
  std::vector<double> out(blocks);
  for (std::size_t j = 0; j < blocks; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < scale; ++k) sum += x[j * scale + k];
    out[j] = sum / static_cast<double>(scale);
  }
  const std::size_t rest = x.size() - blocks * scale;
  if (remainder == Remainder::average && rest > 0) {
    double sum = 0.0;
    for (std::size_t k = blocks * scale; k < x.size(); ++k) sum += x[k];
    out.push_back(sum / static_cast<double>(rest));
  }
  return Series(std::move(out), series.label());
}

namespace {

[[noreturn]] void bad_score(const char* what, std::size_t index, double value) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << ": score[" << index << "] = " << value;
  throw Error(ErrorKind::usage, msg.str());
}

}  // namespace

std::vector<double> rescale_for_plot(std::span<const double> scores, RescaleKind kind) {
  std::vector<double> out;
  out.reserve(scores.size());
  switch (kind) {
    case RescaleKind::minmax: {
      if (scores.empty()) throw Error(ErrorKind::usage, "minmax rescale needs at least two distinct scores");
      const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
      if (!(*hi > *lo)) {
        bad_score("minmax rescale needs at least two distinct scores", 0, scores.front());
      }
      const double span = *hi - *lo;
      for (double s : scores) out.push_back(std::clamp((s - *lo) / span, 0.0, 1.0));
      break;
    }
    case RescaleKind::inv_ln:
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!(scores[i] > 1.0)) bad_score("inv_ln requires scores > 1", i, scores[i]);
        out.push_back(1.0 / std::log(scores[i]));
      }
      break;
    case RescaleKind::inv_abs:
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] == 0.0) bad_score("inv_abs requires nonzero scores", i, scores[i]);
        out.push_back(1.0 / std::abs(scores[i]));
      }
      break;
  }
  return out;
}

}  // namespace tscx
