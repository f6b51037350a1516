#include "tscx/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <span>

#include "tscx/error.hpp"
#include "tscx/generators.hpp"
#include "tscx/ingest.hpp"
#include "tscx/metrics.hpp"
#include "tscx/reference_values.hpp"
#include "tscx/rng.hpp"

namespace tscx {

namespace ref = reference;

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::table1: return "table1";
    case Experiment::table2: return "table2";
    case Experiment::table3_logistic: return "table3_logistic";
    case Experiment::santafe: return "santafe";
    case Experiment::arma_table4: return "arma_table4";
    case Experiment::arma_table5: return "arma_table5";
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  for (auto e : {Experiment::table1, Experiment::table2, Experiment::table3_logistic, Experiment::santafe,
                 Experiment::arma_table4, Experiment::arma_table5}) {
    if (name == to_string(e)) return e;
  }
  throw Error(ErrorKind::usage, "unknown experiment '" + std::string(name) + "'");
}

bool Reproduction::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Series reference_logistic(double r) {
  char label[16];
  std::snprintf(label, sizeof label, "r=%.1f", r);
  return logistic_map(r, ref::kLogisticX0, ref::kLogisticKeep, ref::kLogisticTotal).with_label(label);
}

std::optional<std::filesystem::path> find_santafe_file(const std::filesystem::path& data_dir) {
  for (const char* name : {"santafe.txt", "santafe.dat", "santafe_a.txt", "santafe_a.dat", "A.dat", "A.txt"}) {
    const auto p = data_dir / name;
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) return p;
  }
  return std::nullopt;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

std::vector<MetricSpec> table_metrics(const AnalysisConfig& config) {
  AnalysisConfig all = config;
  all.metrics.assign(std::begin(kAllMetrics), std::end(kAllMetrics));
  return all.metric_specs();
}

double expected_value(const ref::ScoreColumn& col, MetricKind k) {
  switch (k) {
    case MetricKind::sampen: return col.sampen;
    case MetricKind::permen: return col.permen;
    case MetricKind::permtest: return col.permtest;
    case MetricKind::runstest: return col.runs;
  }
  return kNaN;
}

double tolerance_for(MetricKind k) {
  switch (k) {
    case MetricKind::sampen:
    case MetricKind::permen: return ref::kEntropyTol;
    case MetricKind::permtest: return ref::kChiSquareTol;
    case MetricKind::runstest: return ref::kRunsTol;
  }
  return 0.0;
}

bool is_test(MetricKind k) { return k == MetricKind::permtest || k == MetricKind::runstest; }

ExperimentReport make_report() {
  ExperimentReport r;
  r.add_column("expected");
  r.add_column("status");
  r.add_column("note");
  return r;
}

// Adds a deterministic cell compared against `expected` at the metric's
// tolerance. Returns whether it matched.
bool add_compared(ExperimentReport& report, const std::string& label, std::size_t scale, const MetricResult& res,
                  double expected, MetricKind kind) {
  ReportRow& row = report.add_result(label, scale, res);
  row.extra["expected"] = expected;
  const bool ok = res.value && std::abs(*res.value - expected) <= tolerance_for(kind);
  row.extra["status"] = std::string(ok ? "pass" : "fail");
  row.extra["note"] = fmt("tolerance %g", tolerance_for(kind));
  return ok;
}

// Mean over replicates of one (label, scale, metric) cell.
struct Accumulator {
  std::vector<double> values;
  std::vector<double> statistics;
  std::vector<double> p_values;
  std::optional<double> df;
  std::size_t errors = 0;
  std::string first_error;

  void add(const MetricResult& r) {
    if (!r.ok()) {
      if (errors++ == 0) first_error = *r.error;
      return;
    }
    values.push_back(*r.value);
    if (r.statistic) statistics.push_back(*r.statistic);
    if (r.p_value) p_values.push_back(*r.p_value);
    if (r.df) df = r.df;
  }

  static std::optional<double> mean(const std::vector<double>& v) {
    if (v.empty()) return std::nullopt;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  }

  std::size_t p_above(double alpha) const {
    return static_cast<std::size_t>(std::count_if(p_values.begin(), p_values.end(), [&](double p) { return p > alpha; }));
  }

  ReportRow row(const std::string& label, std::size_t scale, std::string_view metric) const {
    ReportRow r;
    r.label = label;
    r.scale = scale;
    r.metric = std::string(metric);
    r.value = mean(values);
    r.statistic = mean(statistics);
    r.df = df;
    r.p_value = mean(p_values);
    if (errors > 0) r.warnings.push_back(std::to_string(errors) + " replicate(s) failed: " + first_error);
    r.extra["note"] = "mean of " + std::to_string(values.size()) + " replicates";
    return r;
  }
};

double median_of(std::vector<double> v) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

Check band_check(const std::string& name, double value, double lo, double hi) {
  return {name, value >= lo && value <= hi, fmt("observed %.6g, band [%g, %g]", value, lo, hi)};
}

// ---------------------------------------------------------------- table 1

Reproduction run_table1(const AnalysisConfig& config) {
  Reproduction out;
  out.experiment = Experiment::table1;
  out.report = make_report();
  const auto specs = table_metrics(config);
  const std::vector<std::size_t> scales(ref::kScales.begin(), ref::kScales.end());

  struct Dist {
    IidDistribution kind;
    const char* label;
    const std::array<ref::ScoreColumn, 6>* reference;
  };
  const Dist dists[] = {{IidDistribution::uniform, "uniform", &ref::kTable1Uniform},
                        {IidDistribution::normal, "normal", &ref::kTable1Normal},
                        {IidDistribution::exponential, "exponential", &ref::kTable1Exponential}};

  std::size_t pooled_cells = 0;
  std::size_t pooled_above = 0;
  // p-values of the first replicate, per test metric: the single-draw table.
  std::vector<std::vector<double>> first_rep_p(specs.size());
  for (std::size_t d = 0; d < std::size(dists); ++d) {
    std::vector<std::vector<Accumulator>> acc(scales.size(), std::vector<Accumulator>(specs.size()));
    std::size_t monotone = 0;
    for (std::size_t rep = 0; rep < config.replications; ++rep) {
      const Series s = generate_iid(dists[d].kind, 1000, derive_seed(config.seed, d * 100000 + rep));
      const MseProfile profile = mse_sweep(s, scales, specs, config.tolerance, config.remainder);
      std::vector<double> permen_by_scale;
      for (std::size_t si = 0; si < scales.size(); ++si) {
        for (std::size_t k = 0; k < specs.size(); ++k) {
          const MetricResult& cell = profile.at(si, k);
          acc[si][k].add(cell);
          if (specs[k].kind == MetricKind::permen && cell.value) permen_by_scale.push_back(*cell.value);
          if (is_test(specs[k].kind) && cell.p_value) {
            ++pooled_cells;
            if (*cell.p_value > 0.05) ++pooled_above;
            if (rep == 0) first_rep_p[k].push_back(*cell.p_value);
          }
        }
      }
      const bool non_increasing = permen_by_scale.size() == scales.size() &&
                                  std::is_sorted(permen_by_scale.rbegin(), permen_by_scale.rend());
      if (non_increasing) ++monotone;
    }

    for (std::size_t si = 0; si < scales.size(); ++si) {
      for (std::size_t k = 0; k < specs.size(); ++k) {
        ReportRow row = acc[si][k].row(dists[d].label, scales[si], to_string(specs[k].kind));
        row.extra["expected"] = expected_value((*dists[d].reference)[si], specs[k].kind);
        row.extra["status"] = std::string("info");
        if (is_test(specs[k].kind)) {
          row.extra["note"] = std::get<std::string>(row.extra["note"]) + "; p>0.05 in " +
                              std::to_string(acc[si][k].p_above(0.05)) + "/" +
                              std::to_string(acc[si][k].p_values.size());
        }
        out.report.add(std::move(row));
      }
    }

    const auto mean_at = [&](std::size_t si, MetricKind kind) {
      for (std::size_t k = 0; k < specs.size(); ++k) {
        if (specs[k].kind == kind) return Accumulator::mean(acc[si][k].values).value_or(kNaN);
      }
      return kNaN;
    };
    const std::string label = dists[d].label;
    auto mark = [&](MetricKind kind, const Check& c) {
      out.checks.push_back(c);
      for (auto& row : out.report.rows()) {
        if (row.label == label && row.scale == 1 && row.metric == to_string(kind)) {
          row.extra["status"] = std::string(c.passed ? "pass" : "fail");
        }
      }
    };
    if (dists[d].kind == IidDistribution::uniform) {
      mark(MetricKind::sampen, band_check("uniform sampen mean (scale 1)", mean_at(0, MetricKind::sampen),
                                          ref::kUniformSampEnLo, ref::kUniformSampEnHi));
    } else if (dists[d].kind == IidDistribution::normal) {
      mark(MetricKind::permen, band_check("normal permen mean (scale 1)", mean_at(0, MetricKind::permen),
                                          ref::kNormalPermEnLo, ref::kNormalPermEnHi));
    } else {
      mark(MetricKind::sampen, band_check("exponential sampen mean (scale 1)", mean_at(0, MetricKind::sampen),
                                          ref::kExponentialSampEnLo, ref::kExponentialSampEnHi));
    }
    const double frac = static_cast<double>(monotone) / static_cast<double>(config.replications);
    out.checks.push_back({label + " permen non-increasing across scales",
                          frac >= ref::kMonotonePermEnFraction - 1e-12,
                          std::to_string(monotone) + "/" + std::to_string(config.replications) +
                              " replicates, need >= " + fmt("%.0f%%", 100.0 * ref::kMonotonePermEnFraction)});
  }

  out.checks.push_back({"permtest/runstest p > 0.05 in >= 80% of replicate cells",
                        pooled_cells > 0 && static_cast<double>(pooled_above) >=
                                                ref::kNullPValueFraction * static_cast<double>(pooled_cells),
                        std::to_string(pooled_above) + "/" + std::to_string(pooled_cells) + " cells"});
  // The printed table is a single draw: 3 distributions x 6 scales per test.
  for (std::size_t k = 0; k < specs.size(); ++k) {
    if (!is_test(specs[k].kind)) continue;
    const auto& p = first_rep_p[k];
    const auto above = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](double v) { return v > 0.05; }));
    out.checks.push_back({std::string(to_string(specs[k].kind)) + " p > 0.05 in first-replicate table",
                          p.size() > 0 && static_cast<double>(above) >=
                                              ref::kNullPValueFraction * static_cast<double>(p.size()),
                          std::to_string(above) + "/" + std::to_string(p.size()) + " cells"});
  }
  return out;
}

// ---------------------------------------------------------------- table 2

Reproduction run_table2(const AnalysisConfig& config) {
  Reproduction out;
  out.experiment = Experiment::table2;
  out.report = make_report();
  const auto specs = table_metrics(config);

  for (std::size_t c = 0; c < ref::kTable2Rates.size(); ++c) {
    const Series s = reference_logistic(ref::kTable2Rates[c]);
    const std::string label(ref::kTable2Labels[c]);
    for (const auto& spec : specs) {
      const MetricResult res = evaluate_metric(s, spec);
      const double expected = expected_value(ref::kTable2[c], spec.kind);
      bool ok = add_compared(out.report, label, 1, res, expected, spec.kind);
      std::string detail = res.value ? fmt("observed %.6f, expected %.6f", *res.value, expected) : *res.error;
      if (spec.kind == MetricKind::sampen && c == 0) {
        // Period-4 orbit: every m-match extends, so A == B and the score is exactly 0.
        const auto se = sample_entropy(s, spec.sampen);
        ok = se.value == 0.0 && se.a_count == se.b_count;
        detail = "A=" + std::to_string(se.a_count) + ", B=" + std::to_string(se.b_count);
      }
      if (spec.kind == MetricKind::runstest) detail += " (variant " + std::string(to_string(spec.runs)) + ")";
      out.checks.push_back({label + " " + std::string(to_string(spec.kind)), ok, detail});
      if (spec.kind == MetricKind::permtest) {
        const bool tiny = res.p_value && *res.p_value < ref::kTable2MaxP;
        out.checks.push_back({label + " permtest p < 1e-10", tiny, res.p_value ? fmt("p = %.3g", *res.p_value) : ""});
      }
    }
  }

  // Which runs-test variant reproduces the published r=3.5 statistic.
  {
    const Series s = reference_logistic(3.5);
    for (RunsVariant v : {RunsVariant::above_below_median, RunsVariant::up_down}) {
      const auto rt = runs_test(s, v);
      ReportRow row;
      row.label = "r=3.5";
      row.metric = "runstest[" + std::string(to_string(v)) + "]";
      row.value = rt.z;
      row.statistic = rt.z;
      row.p_value = rt.p_value;
      row.extra["expected"] = ref::kTable2[0].runs;
      const bool match = std::abs(rt.z - ref::kTable2[0].runs) <= ref::kRunsTol;
      row.extra["status"] = std::string(match ? "pass" : "fail");
      row.extra["note"] = std::string(match ? "variant reproduces published statistic" : "variant does not match");
      out.report.add(std::move(row));
    }
  }

  // Noisy column: r = 3.5 orbit plus N(0, 0.1) noise, averaged over replicates.
  const Series base = reference_logistic(3.5);
  const std::string label(ref::kTable2Labels[3]);
  std::vector<Accumulator> acc(specs.size());
  for (std::size_t rep = 0; rep < config.replications; ++rep) {
    const Series noisy = add_noise(base, ref::kLogisticNoiseSd, NoiseScale::absolute, derive_seed(config.seed, rep));
    for (std::size_t k = 0; k < specs.size(); ++k) acc[k].add(evaluate_metric(noisy, specs[k]));
  }
  for (std::size_t k = 0; k < specs.size(); ++k) {
    ReportRow row = acc[k].row(label, 1, to_string(specs[k].kind));
    row.extra["expected"] = expected_value(ref::kTable2[3], specs[k].kind);
    row.extra["status"] = std::string("info");
    if (specs[k].kind == MetricKind::sampen) {
      const double mean = row.value.value_or(kNaN);
      const Check c = band_check(label + " sampen mean", mean, ref::kTable2[3].sampen - ref::kTable2NoiseSampEnBand,
                                 ref::kTable2[3].sampen + ref::kTable2NoiseSampEnBand);
      row.extra["status"] = std::string(c.passed ? "pass" : "fail");
      out.checks.push_back(c);
    }
    out.report.add(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------- MSE helpers

// Deterministic MSE block: every cell compared at tolerance. Checks are
// emitted for the metrics listed in `gated`.
void compared_mse_block(Reproduction& out, const Series& s, const std::string& label,
                        const std::array<ref::ScoreColumn, 6>& expected, const AnalysisConfig& config,
                        std::initializer_list<MetricKind> gated) {
  const auto specs = table_metrics(config);
  const std::vector<std::size_t> scales(ref::kScales.begin(), ref::kScales.end());
  const MseProfile profile = mse_sweep(s, scales, specs, config.tolerance, config.remainder);
  for (std::size_t si = 0; si < scales.size(); ++si) {
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const MetricResult& res = profile.at(si, k);
      const double exp = expected_value(expected[si], specs[k].kind);
      const bool ok = add_compared(out.report, label, scales[si], res, exp, specs[k].kind);
      if (std::find(gated.begin(), gated.end(), specs[k].kind) != gated.end()) {
        out.checks.push_back({label + " scale " + std::to_string(scales[si]) + " " +
                                  std::string(to_string(specs[k].kind)),
                              ok, res.value ? fmt("observed %.6f, expected %.6f", *res.value, exp) : *res.error});
      }
    }
  }
}

// Stochastic MSE block: replicate means, reported for information.
std::vector<std::vector<Accumulator>> averaged_mse_block(Reproduction& out, const std::string& label,
                                                         const std::array<ref::ScoreColumn, 6>& expected,
                                                         const AnalysisConfig& config,
                                                         const std::function<Series(std::size_t)>& draw) {
  const auto specs = table_metrics(config);
  const std::vector<std::size_t> scales(ref::kScales.begin(), ref::kScales.end());
  std::vector<std::vector<Accumulator>> acc(scales.size(), std::vector<Accumulator>(specs.size()));
  for (std::size_t rep = 0; rep < config.replications; ++rep) {
    const MseProfile profile = mse_sweep(draw(rep), scales, specs, config.tolerance, config.remainder);
    for (std::size_t si = 0; si < scales.size(); ++si) {
      for (std::size_t k = 0; k < specs.size(); ++k) acc[si][k].add(profile.at(si, k));
    }
  }
  for (std::size_t si = 0; si < scales.size(); ++si) {
    for (std::size_t k = 0; k < specs.size(); ++k) {
      ReportRow row = acc[si][k].row(label, scales[si], to_string(specs[k].kind));
      row.extra["expected"] = expected_value(expected[si], specs[k].kind);
      row.extra["status"] = std::string("info");
      out.report.add(std::move(row));
    }
  }
  return acc;
}

Reproduction run_table3(const AnalysisConfig& config) {
  Reproduction out;
  out.experiment = Experiment::table3_logistic;
  out.report = make_report();
  compared_mse_block(out, reference_logistic(3.7), "Logistic map r=3.7", ref::kTable3Logistic37, config,
                     {MetricKind::sampen, MetricKind::permen, MetricKind::permtest});
  const Series base = reference_logistic(3.5);
  averaged_mse_block(out, "Logistic map r=3.5 with N(0,0.1) noise", ref::kTable3Logistic35Noise, config,
                     [&](std::size_t rep) {
                       return add_noise(base, ref::kLogisticNoiseSd, NoiseScale::absolute,
                                        derive_seed(config.seed, rep));
                     });
  return out;
}

// ---------------------------------------------------------------- Santa Fe

Reproduction run_santafe(const AnalysisConfig& config, const std::optional<std::filesystem::path>& data_dir) {
  Reproduction out;
  out.experiment = Experiment::santafe;
  out.report = make_report();
  std::optional<std::filesystem::path> file;
  if (data_dir) file = find_santafe_file(*data_dir);
  if (!file) {
    out.skipped = true;
    out.skip_reason = data_dir ? "no Santa Fe series (santafe.txt, santafe.dat or A.dat) in " + data_dir->string()
                               : "no --data-dir given";
    return out;
  }
  SeriesFile source;
  source.path = *file;
  const Series clean = read_series(source);
  const auto specs = table_metrics(config);

  // Clean column: deterministic.
  for (const auto& spec : specs) {
    const MetricResult res = evaluate_metric(clean, spec);
    const double exp = expected_value(ref::kSantaFe[0], spec.kind);
    const bool ok = add_compared(out.report, std::string(ref::kSantaFeLabels[0]), 1, res, exp, spec.kind);
    out.checks.push_back({"santafe clean " + std::string(to_string(spec.kind)), ok,
                          res.value ? fmt("observed %.6f, expected %.6f", *res.value, exp) : *res.error});
  }

  // Noise columns: relative-SD noise, replicate means.
  std::vector<std::vector<double>> means(ref::kSantaFeNoise.size(), std::vector<double>(specs.size(), kNaN));
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto* row = out.report.find(ref::kSantaFeLabels[0], 1, to_string(specs[k].kind));
    if (row && row->value) means[0][k] = *row->value;
  }
  for (std::size_t c = 1; c < ref::kSantaFeNoise.size(); ++c) {
    std::vector<Accumulator> acc(specs.size());
    for (std::size_t rep = 0; rep < config.replications; ++rep) {
      const Series noisy = add_noise(clean, ref::kSantaFeNoise[c], NoiseScale::relative_sd,
                                     derive_seed(config.seed, c * 100000 + rep));
      for (std::size_t k = 0; k < specs.size(); ++k) acc[k].add(evaluate_metric(noisy, specs[k]));
    }
    for (std::size_t k = 0; k < specs.size(); ++k) {
      ReportRow row = acc[k].row(std::string(ref::kSantaFeLabels[c]), 1, to_string(specs[k].kind));
      row.extra["expected"] = expected_value(ref::kSantaFe[c], specs[k].kind);
      row.extra["status"] = std::string("info");
      means[c][k] = row.value.value_or(kNaN);
      out.report.add(std::move(row));
    }
  }
  for (std::size_t k = 0; k < specs.size(); ++k) {
    // Entropies rise with noise; chi-square and |z| fall.
    std::vector<double> series_of_scores;
    for (const auto& m : means) {
      const double v = m[k];
      series_of_scores.push_back(specs[k].kind == MetricKind::runstest ? -std::abs(v)
                                 : specs[k].kind == MetricKind::permtest ? -v
                                                                         : v);
    }
    bool increasing = true;
    for (std::size_t i = 1; i < series_of_scores.size(); ++i) {
      increasing = increasing && series_of_scores[i] > series_of_scores[i - 1];
    }
    out.checks.push_back({"santafe " + std::string(to_string(specs[k].kind)) + " orders clean < sd/10 < sd/5 < 1 sd",
                          increasing, ""});
  }

  compared_mse_block(out, clean, "Santa fe - clean", ref::kSantaFeMseClean, config,
                     {MetricKind::sampen, MetricKind::permen, MetricKind::permtest});
  averaged_mse_block(out, "Santa fe with N(0,0.2*sd) noise", ref::kSantaFeMseNoise, config, [&](std::size_t rep) {
    return add_noise(clean, 0.2, NoiseScale::relative_sd, derive_seed(config.seed, 900000 + rep));
  });
  return out;
}

// -------------------------------------------------------------------- ARMA

Series arma_draw(std::size_t process, std::uint64_t base_seed, std::size_t rep) {
  const auto& recipe = ref::kArmaRecipes[process];
  const std::span<const double> ar(recipe.ar.data(), recipe.ar_order);
  const std::span<const double> ma(recipe.ma.data(), recipe.ma_order);
  return arma_simulate(ar, ma, ref::kArmaLength, kDefaultArmaBurnIn, derive_seed(base_seed, process * 100000 + rep))
      .with_label(std::string(recipe.label));
}

Reproduction run_arma_table4(const AnalysisConfig& config) {
  Reproduction out;
  out.experiment = Experiment::arma_table4;
  out.report = make_report();
  const auto specs = table_metrics(config);
  const std::size_t np = ref::kArmaRecipes.size();

  // scores[process][metric][rep]
  std::vector<std::vector<std::vector<MetricResult>>> scores(np, std::vector<std::vector<MetricResult>>(specs.size()));
  for (std::size_t rep = 0; rep < config.replications; ++rep) {
    for (std::size_t p = 0; p < np; ++p) {
      const Series s = arma_draw(p, config.seed, rep);
      for (std::size_t k = 0; k < specs.size(); ++k) scores[p][k].push_back(evaluate_metric(s, specs[k]));
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t k = 0; k < specs.size(); ++k) {
      Accumulator acc;
      for (const auto& r : scores[p][k]) acc.add(r);
      ReportRow row = acc.row(std::string(ref::kArmaRecipes[p].label), 1, to_string(specs[k].kind));
      row.extra["expected"] = expected_value(ref::kArmaTable[p], specs[k].kind);
      row.extra["status"] = std::string("info");
      out.report.add(std::move(row));
    }
  }

  // Per replicate: entropies strictly fall and test statistics strictly rise
  // from ARMA(2,2) to ARMA(1,1) to AR(1).
  for (std::size_t k = 0; k < specs.size(); ++k) {
    std::size_t ordered = 0;
    for (std::size_t rep = 0; rep < config.replications; ++rep) {
      double v[3];
      bool ok = true;
      for (std::size_t p = 0; p < np; ++p) {
        const auto& r = scores[p][k][rep];
        ok = ok && r.value.has_value();
        v[p] = r.value.value_or(kNaN);
        if (specs[k].kind == MetricKind::runstest) v[p] = std::abs(v[p]);
      }
      if (!ok) continue;
      const bool falling = v[0] > v[1] && v[1] > v[2];
      const bool rising = v[0] < v[1] && v[1] < v[2];
      if (is_test(specs[k].kind) ? rising : falling) ++ordered;
    }
    const double frac = static_cast<double>(ordered) / static_cast<double>(config.replications);
    out.checks.push_back({std::string(to_string(specs[k].kind)) +
                              (is_test(specs[k].kind) ? " rises" : " falls") + " ARMA(2,2) -> ARMA(1,1) -> AR(1)",
                          frac >= ref::kArmaOrderingFraction - 1e-12,
                          std::to_string(ordered) + "/" + std::to_string(config.replications) + " replicates"});
  }

  auto median_p = [&](std::size_t p, MetricKind kind) {
    std::vector<double> ps;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      if (specs[k].kind != kind) continue;
      for (const auto& r : scores[p][k]) {
        if (r.p_value) ps.push_back(*r.p_value);
      }
    }
    return median_of(ps);
  };
  const double ar1_perm = median_p(2, MetricKind::permtest);
  out.checks.push_back({"AR(1) permtest median p < 0.001", ar1_perm < ref::kArmaAr1PermTestMaxP,
                        fmt("median p = %.3g", ar1_perm)});
  const double arma22_runs = median_p(0, MetricKind::runstest);
  out.checks.push_back({"ARMA(2,2) runstest median p < 0.01", arma22_runs < ref::kArmaArma22RunsMaxP,
                        fmt("median p = %.3g", arma22_runs)});
  return out;
}

Reproduction run_arma_table5(const AnalysisConfig& config) {
  Reproduction out;
  out.experiment = Experiment::arma_table5;
  out.report = make_report();
  const auto specs = table_metrics(config);
  for (std::size_t p = 0; p < ref::kArmaRecipes.size(); ++p) {
    const std::string label(ref::kArmaRecipes[p].label);
    const auto acc = averaged_mse_block(out, label, ref::kArmaMse[p], config,
                                        [&](std::size_t rep) { return arma_draw(p, config.seed, rep); });
    if (p == 2) {
      std::vector<double> absz;
      for (std::size_t si = 0; si < acc.size(); ++si) {
        for (std::size_t k = 0; k < specs.size(); ++k) {
          if (specs[k].kind == MetricKind::runstest) absz.push_back(std::abs(Accumulator::mean(acc[si][k].values).value_or(kNaN)));
        }
      }
      const bool monotone = std::is_sorted(absz.rbegin(), absz.rend());
      std::string detail;
      for (double z : absz) detail += fmt("%.3f ", z);
      out.checks.push_back({"AR(1) mean |runs z| non-increasing across scales", monotone, detail});
    }
  }
  return out;
}

}  // namespace

Reproduction reproduce(Experiment experiment, const AnalysisConfig& config,
                       const std::optional<std::filesystem::path>& data_dir) {
  config.validate();
  AnalysisConfig c = config;
  c.remainder = Remainder::average;
  switch (experiment) {
    case Experiment::table1: return run_table1(c);
    case Experiment::table2: return run_table2(c);
    case Experiment::table3_logistic: return run_table3(c);
    case Experiment::santafe: return run_santafe(c, data_dir);
    case Experiment::arma_table4: return run_arma_table4(c);
    case Experiment::arma_table5: return run_arma_table5(c);
  }
  throw Error(ErrorKind::usage, "unknown experiment");
}

}  // namespace tscx
