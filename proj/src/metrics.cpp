#include "tscx/metrics.hpp"

#include <cstdio>
#include <string>

#include "tscx/error.hpp"

namespace tscx {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::sampen: return "sampen";
    case MetricKind::permen: return "permen";
    case MetricKind::permtest: return "permtest";
    case MetricKind::runstest: return "runstest";
  }
  return "unknown";
}

MetricKind parse_metric(std::string_view name) {
  for (MetricKind k : kAllMetrics) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorKind::usage, "unknown metric '" + std::string(name) + "'");
}

MetricResult evaluate_metric(const Series& series, const MetricSpec& spec) {
  MetricResult out;
  out.name = std::string(to_string(spec.kind));
  try {
    switch (spec.kind) {
      case MetricKind::sampen:
        out.value = sample_entropy(series, spec.sampen).value;
        break;
      case MetricKind::permen:
        out.value = permutation_entropy(series, spec.permen);
        break;
      case MetricKind::permtest: {
        const auto res = permutation_test(series, spec.t);
        out.value = res.chi_square;
        out.statistic = res.chi_square;
        out.df = static_cast<double>(res.df);
        out.p_value = res.p_value;
        if (res.low_expected_warning) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "low expected count per pattern (%.4g < 5)", res.expected_per_cell);
          out.warnings.emplace_back(buf);
        }
        break;
      }
      case MetricKind::runstest: {
        const auto res = runs_test(series, spec.runs);
        out.value = res.z;
        out.statistic = res.z;
        out.p_value = res.p_value;
        break;
      }
    }
  } catch (const Error& e) {
    out.value.reset();
    out.statistic.reset();
    out.df.reset();
    out.p_value.reset();
    out.error = e.what();
    out.error_kind = e.kind();
  }
  return out;
}

MseProfile mse_sweep(const Series& series, std::span<const std::size_t> scales, std::span<const MetricSpec> metrics,
                     SweepTolerance tolerance, Remainder remainder) {
  if (scales.empty()) throw Error(ErrorKind::usage, "empty scale list");
  if (metrics.empty()) throw Error(ErrorKind::usage, "empty metric list");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] < 1 || scales[i] > series.size()) {
      throw Error(ErrorKind::usage, "invalid scale " + std::to_string(scales[i]));
    }
    if (i > 0 && scales[i] <= scales[i - 1]) throw Error(ErrorKind::usage, "scales must be strictly increasing");
  }

  MseProfile profile;
  profile.scales.assign(scales.begin(), scales.end());
  profile.metrics.assign(metrics.begin(), metrics.end());

  if (tolerance == SweepTolerance::fixed_from_input) {
    const double sd = summary(series).sd;
    for (auto& m : profile.metrics) {
      if (m.kind == MetricKind::sampen && m.sampen.r_mode == ToleranceMode::per_input_sd) {
        m.sampen.r *= sd;
        m.sampen.r_mode = ToleranceMode::absolute;
      }
    }
  }

  profile.cells.reserve(scales.size());
  for (std::size_t scale : scales) {
    const Series grained = coarse_grain(series, scale, remainder);
    std::vector<MetricResult> row;
    row.reserve(profile.metrics.size());
    for (const auto& m : profile.metrics) row.push_back(evaluate_metric(grained, m));
    profile.cells.push_back(std::move(row));
  }
  return profile;
}

}  // namespace tscx
