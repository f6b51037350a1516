#include "tscx/analysis.hpp"

#include <algorithm>
#include <set>

#include "tscx/error.hpp"
#include "tscx/plot.hpp"

namespace tscx {

void AnalysisConfig::validate() const {
  if (metrics.empty()) throw Error(ErrorKind::usage, "no metrics selected");
  if (m < 1) throw Error(ErrorKind::usage, "--m must be >= 1");
  if (!(r_factor > 0.0)) throw Error(ErrorKind::usage, "--r-factor must be > 0");
  if (n < 2 || n > 8) throw Error(ErrorKind::usage, "--n must lie in [2, 8]");
  if (t < 2 || t > 8) throw Error(ErrorKind::usage, "--t must lie in [2, 8]");
  if (scales.empty()) throw Error(ErrorKind::usage, "empty scale list");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] < 1) throw Error(ErrorKind::usage, "scales must be positive");
    if (i > 0 && scales[i] <= scales[i - 1]) throw Error(ErrorKind::usage, "scales must be strictly increasing");
  }
  if (replications < 1) throw Error(ErrorKind::usage, "--replications must be >= 1");
}

std::vector<MetricSpec> AnalysisConfig::metric_specs() const {
  std::vector<MetricSpec> specs;
  for (MetricKind k : metrics) {
    MetricSpec s;
    s.kind = k;
    s.sampen = SampEnParams{m, r_factor, ToleranceMode::per_input_sd};
    s.permen = PermEnParams{n, true};
    s.t = t;
    s.runs = runs_variant;
    specs.push_back(s);
  }
  return specs;
}

namespace {

std::vector<std::string> unique_labels(std::span<const Series> inputs) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string base = inputs[i].label().empty() ? "series" + std::to_string(i + 1) : inputs[i].label();
    std::string label = base;
    for (int k = 2; used.count(label); ++k) label = base + "#" + std::to_string(k);
    used.insert(label);
    out.push_back(label);
  }
  return out;
}

}  // namespace

ExperimentReport analyze(std::span<const Series> inputs, const AnalysisConfig& config) {
  config.validate();
  if (inputs.empty()) throw Error(ErrorKind::usage, "no inputs");
  const auto specs = config.metric_specs();
  const auto labels = unique_labels(inputs);
  ExperimentReport report;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (const auto& spec : specs) report.add_result(labels[i], 1, evaluate_metric(inputs[i], spec));
  }
  return report;
}

ExperimentReport mse(std::span<const Series> inputs, const AnalysisConfig& config) {
  config.validate();
  if (inputs.empty()) throw Error(ErrorKind::usage, "no inputs");
  const auto specs = config.metric_specs();
  const auto labels = unique_labels(inputs);
  ExperimentReport report;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (config.scales.back() > inputs[i].size()) {
      throw Error(ErrorKind::data, "scale " + std::to_string(config.scales.back()) + " exceeds length of " + labels[i]);
    }
    const MseProfile profile = mse_sweep(inputs[i], config.scales, specs, config.tolerance, config.remainder);
    for (std::size_t s = 0; s < profile.scales.size(); ++s) {
      for (std::size_t k = 0; k < specs.size(); ++k) report.add_result(labels[i], profile.scales[s], profile.at(s, k));
    }
  }
  return report;
}

ExperimentReport compare_groups(std::span<const Series> group_a, std::span<const Series> group_b,
                                const AnalysisConfig& config, const std::string& name_a, const std::string& name_b) {
  config.validate();
  if (group_a.size() < 2 || group_b.size() < 2) {
    throw Error(ErrorKind::usage, "group too small: each group needs at least two series");
  }
  if (name_a == name_b) throw Error(ErrorKind::usage, "group names must differ");
  const auto specs = config.metric_specs();

  ExperimentReport report;
  report.add_column("group");
  for (const char* c : {"mean_a", "mean_b", "q1", "q3", "whisker_low", "whisker_high", "mean", "n"}) {
    report.add_column(c);
  }

  std::vector<std::vector<double>> scores_a(specs.size()), scores_b(specs.size());
  auto score_group = [&](std::span<const Series> group, const std::string& name,
                         std::vector<std::vector<double>>& scores) {
    const auto labels = unique_labels(group);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t k = 0; k < specs.size(); ++k) {
        const MetricResult res = evaluate_metric(group[i], specs[k]);
        ReportRow& row = report.add_result(name + ":" + labels[i], 1, res);
        row.extra["group"] = name;
        if (res.value) scores[k].push_back(*res.value);
      }
    }
  };
  score_group(group_a, name_a, scores_a);
  score_group(group_b, name_b, scores_b);

  for (std::size_t k = 0; k < specs.size(); ++k) {
    ReportRow row;
    row.label = "welch";
    row.metric = std::string(to_string(specs[k].kind));
    try {
      const TTestResult tt = welch_t_test(scores_a[k], scores_b[k]);
      row.value = tt.t_statistic;
      row.statistic = tt.t_statistic;
      row.df = tt.df;
      row.p_value = tt.p_value;
      row.extra["mean_a"] = tt.mean_a;
      row.extra["mean_b"] = tt.mean_b;
    } catch (const Error& e) {
      row.warnings.push_back(error_warning(e.kind(), e.what()));
    }
    report.add(std::move(row));
  }

  auto box_rows = [&](const std::string& name, const std::vector<std::vector<double>>& scores) {
    for (std::size_t k = 0; k < specs.size(); ++k) {
      if (scores[k].empty()) continue;
      const BoxStats b = box_stats(scores[k]);
      ReportRow row;
      row.label = "box:" + name;
      row.metric = std::string(to_string(specs[k].kind));
      row.value = b.median;
      row.extra["q1"] = b.q1;
      row.extra["q3"] = b.q3;
      row.extra["whisker_low"] = b.whisker_low;
      row.extra["whisker_high"] = b.whisker_high;
      row.extra["mean"] = b.mean;
      row.extra["n"] = static_cast<double>(b.n);
      report.add(std::move(row));
    }
  };
  box_rows(name_a, scores_a);
  box_rows(name_b, scores_b);
  return report;
}

}  // namespace tscx
