// tscx command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 success (also a skipped optional experiment, and partial
// per-cell failure), 1 usage error, 2 data error, 3 numerical error.

#include <tscx/tscx.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  tscx_status status;
  std::string message;
};

void check(tscx_status s) {
  if (s != TSCX_OK) throw Failure{s, tscx_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using SeriesPtr = std::unique_ptr<tscx_series, Deleter<tscx_series, tscx_series_free>>;
using ReportPtr = std::unique_ptr<tscx_report, Deleter<tscx_report, tscx_report_free>>;
using ConfigPtr = std::unique_ptr<tscx_config, Deleter<tscx_config, tscx_config_free>>;
using ReproPtr = std::unique_ptr<tscx_reproduction, Deleter<tscx_reproduction, tscx_reproduction_free>>;

struct Options {
  std::vector<std::string> metrics;
  std::size_t m = 2;
  double r_factor = 0.2;
  std::size_t n = 5;
  std::size_t t = 5;
  std::string runs_variant = "above_below_median";
  std::vector<std::size_t> scales{1, 2, 3, 4, 5, 10};
  std::optional<std::uint64_t> seed;
  std::size_t replications = 30;
  bool fixed_tolerance = false;
  bool average_remainder = false;
  std::string format = "csv";
  std::string out;

  std::vector<std::string> inputs;
  std::vector<std::string> specs;
  std::string column;
  bool skip_header = false;
};

void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--metric", o.metrics, "Metrics: sampen, permen, permtest, runstest (comma list; default all)")
      ->delimiter(',')
      ->allow_extra_args(false);
  cmd->add_option("--m", o.m, "SampEn embedding dimension")->capture_default_str();
  cmd->add_option("--r-factor", o.r_factor, "SampEn tolerance as a fraction of the series SD")->capture_default_str();
  cmd->add_option("--n", o.n, "PermEn tuple length")->capture_default_str();
  cmd->add_option("--t", o.t, "Permutation-test group size")->capture_default_str();
  cmd->add_option("--runs-variant", o.runs_variant, "above_below_median or up_down")->capture_default_str();
  cmd->add_option("--scales", o.scales, "MSE scale factors (comma list)")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--replications", o.replications, "Replicates per stochastic cell")->capture_default_str();
  cmd->add_flag("--fixed-tolerance", o.fixed_tolerance, "Keep the input series' SampEn radius at every scale");
  cmd->add_flag("--average-remainder", o.average_remainder,
                "Coarse-grain a short final block into its mean instead of dropping it");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "Output file (default stdout)");
}

void add_input_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("inputs", o.inputs, "Series files (one value per line, or CSV with --column)");
  cmd->add_option("--spec", o.specs, "GeneratorSpec JSON, inline or a file path (repeatable)")->allow_extra_args(false);
  cmd->add_option("--column", o.column, "Read inputs as CSV and take this column (name or 0-based index)");
  cmd->add_flag("--skip-header", o.skip_header, "Inputs start with a header line");
}

ConfigPtr make_config(const Options& o) {
  tscx_config* raw = nullptr;
  check(tscx_config_create(&raw));
  ConfigPtr c(raw);
  if (!o.metrics.empty()) {
    std::string joined;
    for (const auto& m : o.metrics) joined += (joined.empty() ? "" : ",") + m;
    check(tscx_config_set_metrics(c.get(), joined.c_str()));
  }
  check(tscx_config_set_sampen(c.get(), o.m, o.r_factor));
  check(tscx_config_set_permen(c.get(), o.n));
  check(tscx_config_set_permtest(c.get(), o.t));
  check(tscx_config_set_runs_variant(c.get(), o.runs_variant.c_str()));
  check(tscx_config_set_scales(c.get(), o.scales.data(), o.scales.size()));
  if (o.seed) check(tscx_config_set_seed(c.get(), *o.seed));
  check(tscx_config_set_replications(c.get(), o.replications));
  check(tscx_config_set_fixed_tolerance(c.get(), o.fixed_tolerance ? 1 : 0));
  check(tscx_config_set_average_remainder(c.get(), o.average_remainder ? 1 : 0));
  check(tscx_config_validate(c.get()));
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{TSCX_ERR_DATA, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON or a path to a JSON file; --seed, when given, replaces the seed.
std::string spec_text(const std::string& arg, const std::optional<std::uint64_t>& seed) {
  std::string text = arg.find('{') != std::string::npos ? arg : slurp(arg);
  if (!seed) return text;
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Failure{TSCX_ERR_USAGE, std::string("invalid generator spec: ") + e.what()};
  }
  if (!j.is_object()) throw Failure{TSCX_ERR_USAGE, "generator spec must be a JSON object"};
  j["seed"] = *seed;
  return j.dump();
}

SeriesPtr read_input(const std::string& path, const Options& o) {
  tscx_series* s = nullptr;
  check(tscx_series_read(path.c_str(), o.column.empty() ? 0 : 1, o.column.empty() ? nullptr : o.column.c_str(),
                         o.skip_header ? 1 : 0, &s));
  return SeriesPtr(s);
}

SeriesPtr generate_input(const std::string& spec, const Options& o) {
  tscx_series* s = nullptr;
  check(tscx_series_generate(spec_text(spec, o.seed).c_str(), &s));
  return SeriesPtr(s);
}

void emit(const tscx_report* report, const Options& o) {
  if (!o.out.empty()) {
    check(tscx_report_write(report, o.format.c_str(), o.out.c_str()));
    return;
  }
  char* text = nullptr;
  check(tscx_report_render(report, o.format.c_str(), &text));
  std::fputs(text, stdout);
  tscx_string_free(text);
}

using Command = tscx_status (*)(const tscx_series* const*, size_t, const tscx_config*, tscx_report**);

// analyze / mse: a failed input becomes error cells; the command fails only
// when every cell failed.
int run_scored(const Options& o, Command command, bool per_scale) {
  const ConfigPtr config = make_config(o);
  if (o.inputs.empty() && o.specs.empty()) throw Failure{TSCX_ERR_USAGE, "no inputs (give files or --spec)"};

  std::vector<SeriesPtr> series;
  tscx_report* raw = nullptr;
  check(tscx_report_create(&raw));
  ReportPtr errors(raw);
  auto load = [&](const std::string& label, auto&& loader) {
    try {
      series.push_back(loader());
    } catch (const Failure& f) {
      if (f.status == TSCX_ERR_USAGE) throw;
      std::fprintf(stderr, "tscx: warning: %s: %s\n", label.c_str(), f.message.c_str());
      check(tscx_report_add_input_error(errors.get(), label.c_str(), config.get(), per_scale ? 1 : 0, f.status,
                                        f.message.c_str()));
    }
  };
  for (const auto& path : o.inputs) {
    load(std::filesystem::path(path).stem().string(), [&] { return read_input(path, o); });
  }
  for (std::size_t i = 0; i < o.specs.size(); ++i) {
    load("spec" + std::to_string(i + 1), [&] { return generate_input(o.specs[i], o); });
  }

  ReportPtr report;
  if (!series.empty()) {
    std::vector<const tscx_series*> handles;
    for (const auto& s : series) handles.push_back(s.get());
    tscx_report* out = nullptr;
    check(command(handles.data(), handles.size(), config.get(), &out));
    report.reset(out);
    check(tscx_report_merge(report.get(), errors.get()));
  } else {
    report = std::move(errors);
  }

  tscx_status first = TSCX_OK;
  const std::size_t failed = tscx_report_failed_rows(report.get(), &first);
  const std::size_t rows = tscx_report_row_count(report.get());
  emit(report.get(), o);
  if (failed == rows) {
    std::fprintf(stderr, "tscx: error: every cell failed\n");
    return first;
  }
  if (failed > 0) std::fprintf(stderr, "tscx: warning: %zu of %zu cells failed\n", failed, rows);
  return 0;
}

int run_generate(const Options& o) {
  if (o.specs.size() != 1) throw Failure{TSCX_ERR_USAGE, "generate takes exactly one --spec"};
  const SeriesPtr s = generate_input(o.specs.front(), o);
  if (!o.out.empty()) {
    check(tscx_series_write(s.get(), o.out.c_str()));
    return 0;
  }
  std::vector<double> values(tscx_series_length(s.get()));
  tscx_series_copy_values(s.get(), values.data(), values.size());
  for (double v : values) std::printf("%.17g\n", v);
  return 0;
}

int run_reproduce(const Options& o, const std::string& experiment, const std::string& data_dir) {
  const ConfigPtr config = make_config(o);
  tscx_reproduction* raw = nullptr;
  check(tscx_reproduce(experiment.c_str(), config.get(), data_dir.empty() ? nullptr : data_dir.c_str(), &raw));
  const ReproPtr repro(raw);
  if (tscx_reproduction_skipped(repro.get())) {
    std::printf("%s: skipped (%s)\n", experiment.c_str(), tscx_reproduction_skip_reason(repro.get()));
    return 0;
  }
  emit(tscx_reproduction_report(repro.get()), o);
  std::size_t passed = 0;
  const std::size_t total = tscx_reproduction_check_count(repro.get());
  for (std::size_t i = 0; i < total; ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int ok = 0;
    check(tscx_reproduction_check(repro.get(), i, &name, &ok, &detail));
    passed += ok ? 1 : 0;
    std::fprintf(stderr, "%s %s%s%s\n", ok ? "PASS" : "FAIL", name, *detail ? ": " : "", detail);
  }
  std::fprintf(stderr, "%s: %zu/%zu checks passed\n", experiment.c_str(), passed, total);
  return 0;
}

int run_compare(const Options& o, const std::vector<std::string>& group_a, const std::vector<std::string>& group_b,
                const std::string& name_a, const std::string& name_b, const std::string& plot) {
  const ConfigPtr config = make_config(o);
  std::vector<SeriesPtr> a, b;
  for (const auto& p : group_a) a.push_back(read_input(p, o));
  for (const auto& p : group_b) b.push_back(read_input(p, o));
  std::vector<const tscx_series*> ha, hb;
  for (const auto& s : a) ha.push_back(s.get());
  for (const auto& s : b) hb.push_back(s.get());
  tscx_report* raw = nullptr;
  check(tscx_compare_groups(ha.data(), ha.size(), hb.data(), hb.size(), config.get(), name_a.c_str(), name_b.c_str(),
                            &raw));
  const ReportPtr report(raw);
  emit(report.get(), o);
  if (!plot.empty()) check(tscx_report_write_plot(report.get(), "box_by_group", plot.c_str()));
  return 0;
}

int run_plot(const std::string& report_path, const std::string& kind, const std::string& out) {
  tscx_report* raw = nullptr;
  check(tscx_report_read(report_path.c_str(), &raw));
  const ReportPtr report(raw);
  if (!out.empty()) {
    check(tscx_report_write_plot(report.get(), kind.c_str(), out.c_str()));
    return 0;
  }
  char* svg = nullptr;
  check(tscx_report_render_plot(report.get(), kind.c_str(), &svg));
  std::fputs(svg, stdout);
  tscx_string_free(svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-series complexity and randomness scores"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tscx_version()));

  Options o;

  auto* analyze = app.add_subcommand("analyze", "Score each input at scale 1");
  add_input_flags(analyze, o);
  add_config_flags(analyze, o);
  add_output_flags(analyze, o);

  auto* mse = app.add_subcommand("mse", "Multiscale sweep over --scales");
  add_input_flags(mse, o);
  add_config_flags(mse, o);
  add_output_flags(mse, o);

  auto* generate = app.add_subcommand("generate", "Write a generated series, one value per line");
  generate->add_option("--spec", o.specs, "GeneratorSpec JSON, inline or a file path")->required();
  generate->add_option("--seed", o.seed, "Override the spec's seed");
  generate->add_option("--out", o.out, "Output file (default stdout)");

  std::string experiment, data_dir;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a published table and check it");
  reproduce->add_option("experiment", experiment, "table1, table2, table3_logistic, santafe, arma_table4, arma_table5")
      ->required();
  reproduce->add_option("--data-dir", data_dir, "Directory holding user-supplied data files");
  add_config_flags(reproduce, o);
  add_output_flags(reproduce, o);

  std::vector<std::string> group_a, group_b;
  std::string name_a = "A", name_b = "B", box_plot;
  auto* compare = app.add_subcommand("compare-groups", "Per-series scores, Welch t-tests and box statistics");
  compare->add_option("--group-a", group_a, "Series files of group A")->required();
  compare->add_option("--group-b", group_b, "Series files of group B")->required();
  compare->add_option("--name-a", name_a, "Label of group A")->capture_default_str();
  compare->add_option("--name-b", name_b, "Label of group B")->capture_default_str();
  compare->add_option("--plot", box_plot, "Also write a box_by_group SVG here");
  compare->add_option("--column", o.column, "Read inputs as CSV and take this column");
  compare->add_flag("--skip-header", o.skip_header, "Inputs start with a header line");
  add_config_flags(compare, o);
  add_output_flags(compare, o);

  std::string report_path, plot_kind;
  auto* plot = app.add_subcommand("plot", "Render a report (CSV or JSON) as SVG");
  plot->add_option("report", report_path, "Report file")->required();
  plot->add_option("--kind", plot_kind, "line_by_scale, grouped_bars or box_by_group")->required();
  plot->add_option("--out", o.out, "Output SVG (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : TSCX_ERR_USAGE;
  }

  try {
    if (*analyze) return run_scored(o, tscx_analyze, false);
    if (*mse) return run_scored(o, tscx_mse, true);
    if (*generate) return run_generate(o);
    if (*reproduce) return run_reproduce(o, experiment, data_dir);
    if (*compare) return run_compare(o, group_a, group_b, name_a, name_b, box_plot);
    if (*plot) return run_plot(report_path, plot_kind, o.out);
  } catch (const Failure& f) {
    std::fprintf(stderr, "tscx: error: %s\n", f.message.c_str());
    return f.status;
  }
  return TSCX_ERR_USAGE;
}
