#include "tscx/tscx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "tscx/analysis.hpp"
#include "tscx/entropy.hpp"
#include "tscx/error.hpp"
#include "tscx/generators.hpp"
#include "tscx/ingest.hpp"
#include "tscx/plot.hpp"
#include "tscx/randomness.hpp"
#include "tscx/report.hpp"
#include "tscx/reproduce.hpp"
#include "tscx/series.hpp"
#include "tscx/special.hpp"

struct tscx_series {
  tscx::Series series;
};

struct tscx_config {
  tscx::AnalysisConfig config;
};

struct tscx_report {
  tscx::ExperimentReport report;
};

struct tscx_reproduction {
  tscx::Reproduction result;
  tscx_report report;
};

namespace {

thread_local std::string g_last_error;

tscx_status fail(tscx_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
tscx_status guarded(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return TSCX_OK;
  } catch (const tscx::Error& e) {
    return fail(static_cast<tscx_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TSCX_ERR_NUMERICAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TSCX_ERR_NUMERICAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw tscx::Error(tscx::ErrorKind::usage, std::string("null argument: ") + what);
}

std::vector<tscx::Series> collect(const tscx_series* const* inputs, std::size_t n) {
  require(n == 0 || inputs != nullptr, "inputs");
  std::vector<tscx::Series> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(inputs[i] != nullptr, "inputs[i]");
    out.push_back(inputs[i]->series);
  }
  return out;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

tscx::ErrorKind to_kind(tscx_status s) {
  switch (s) {
    case TSCX_ERR_USAGE: return tscx::ErrorKind::usage;
    case TSCX_ERR_NUMERICAL: return tscx::ErrorKind::numerical;
    default: return tscx::ErrorKind::data;
  }
}

}  // namespace

extern "C" {

const char* tscx_last_error(void) { return g_last_error.c_str(); }

const char* tscx_version(void) { return "1.0.0"; }

tscx_status tscx_series_create(const double* values, size_t n, const char* label, tscx_series** out) {
  return guarded([&] {
    require(out, "out");
    require(n == 0 || values, "values");
    std::vector<double> v(values, values + n);
    *out = new tscx_series{tscx::Series(std::move(v), label ? label : "")};
  });
}

tscx_status tscx_series_read(const char* path, int csv, const char* column, int skip_header, tscx_series** out) {
  return guarded([&] {
    require(path && out, "path/out");
    tscx::SeriesFile file;
    file.path = path;
    file.format = csv ? tscx::SeriesFormat::csv_column : tscx::SeriesFormat::plain_lines;
    if (column) file.column = column;
    file.skip_header = skip_header != 0;
    *out = new tscx_series{tscx::read_series(file)};
  });
}

tscx_status tscx_series_generate(const char* spec_json, tscx_series** out) {
  return guarded([&] {
    require(spec_json && out, "spec/out");
    *out = new tscx_series{tscx::generate(tscx::parse_generator_spec(spec_json))};
  });
}

tscx_status tscx_series_coarse_grain(const tscx_series* s, size_t scale, tscx_series** out) {
  return guarded([&] {
    require(s && out, "series/out");
    *out = new tscx_series{tscx::coarse_grain(s->series, scale)};
  });
}

tscx_status tscx_series_write(const tscx_series* s, const char* path) {
  return guarded([&] {
    require(s && path, "series/path");
    tscx::write_series(s->series, path);
  });
}

size_t tscx_series_length(const tscx_series* s) { return s ? s->series.size() : 0; }

const char* tscx_series_label(const tscx_series* s) { return s ? s->series.label().c_str() : ""; }

size_t tscx_series_copy_values(const tscx_series* s, double* out, size_t capacity) {
  if (!s) return 0;
  const auto v = s->series.values();
  if (out) std::memcpy(out, v.data(), std::min(capacity, v.size()) * sizeof(double));
  return v.size();
}

void tscx_series_free(tscx_series* s) { delete s; }

tscx_status tscx_sampen(const tscx_series* s, size_t m, double r, int absolute_r, tscx_sampen_result* out) {
  return guarded([&] {
    require(s && out, "series/out");
    const tscx::SampEnParams p{m, r, absolute_r ? tscx::ToleranceMode::absolute : tscx::ToleranceMode::per_input_sd};
    const auto res = tscx::sample_entropy(s->series, p);
    *out = {res.value, res.a_count, res.b_count, res.radius};
  });
}

tscx_status tscx_permen(const tscx_series* s, size_t n, int normalize, double* out) {
  return guarded([&] {
    require(s && out, "series/out");
    *out = tscx::permutation_entropy(s->series, {n, normalize != 0});
  });
}

tscx_status tscx_permtest(const tscx_series* s, size_t t, tscx_permtest_result* out) {
  return guarded([&] {
    require(s && out, "series/out");
    const auto res = tscx::permutation_test(s->series, t);
    *out = {res.chi_square, res.df, res.p_value, res.group_count, res.expected_per_cell,
            res.low_expected_warning ? 1 : 0};
  });
}

tscx_status tscx_runs(const tscx_series* s, tscx_runs_variant variant, tscx_runs_result* out) {
  return guarded([&] {
    require(s && out, "series/out");
    const auto v = variant == TSCX_RUNS_UP_DOWN ? tscx::RunsVariant::up_down : tscx::RunsVariant::above_below_median;
    const auto res = tscx::runs_test(s->series, v);
    *out = {res.z, res.p_value, res.runs, res.n_effective};
  });
}

tscx_status tscx_welch(const double* a, size_t na, const double* b, size_t nb, tscx_ttest_result* out) {
  return guarded([&] {
    require((a || na == 0) && (b || nb == 0) && out, "a/b/out");
    const auto res = tscx::welch_t_test({a, na}, {b, nb});
    *out = {res.t_statistic, res.df, res.p_value, res.mean_a, res.mean_b};
  });
}

double tscx_chi_square_sf(double x, double df) { return tscx::chi_square_sf(x, df); }

double tscx_normal_sf(double z) { return tscx::normal_sf(z); }

tscx_status tscx_config_create(tscx_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tscx_config{};
  });
}

void tscx_config_free(tscx_config* c) { delete c; }

tscx_status tscx_config_set_metrics(tscx_config* c, const char* list) {
  return guarded([&] {
    require(c && list, "config/list");
    std::vector<tscx::MetricKind> metrics;
    std::string_view rest(list);
    while (true) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto kind = tscx::parse_metric(item);
      if (std::find(metrics.begin(), metrics.end(), kind) == metrics.end()) metrics.push_back(kind);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    c->config.metrics = std::move(metrics);
  });
}

tscx_status tscx_config_set_sampen(tscx_config* c, size_t m, double r_factor) {
  return guarded([&] {
    require(c, "config");
    c->config.m = m;
    c->config.r_factor = r_factor;
  });
}

tscx_status tscx_config_set_permen(tscx_config* c, size_t n) {
  return guarded([&] {
    require(c, "config");
    c->config.n = n;
  });
}

tscx_status tscx_config_set_permtest(tscx_config* c, size_t t) {
  return guarded([&] {
    require(c, "config");
    c->config.t = t;
  });
}

tscx_status tscx_config_set_runs_variant(tscx_config* c, const char* variant) {
  return guarded([&] {
    require(c && variant, "config/variant");
    c->config.runs_variant = tscx::parse_runs_variant(variant);
  });
}

tscx_status tscx_config_set_scales(tscx_config* c, const size_t* scales, size_t n) {
  return guarded([&] {
    require(c && (scales || n == 0), "config/scales");
    c->config.scales.assign(scales, scales + n);
  });
}

tscx_status tscx_config_set_seed(tscx_config* c, uint64_t seed) {
  return guarded([&] {
    require(c, "config");
    c->config.seed = seed;
  });
}

tscx_status tscx_config_set_replications(tscx_config* c, size_t replications) {
  return guarded([&] {
    require(c, "config");
    c->config.replications = replications;
  });
}

tscx_status tscx_config_set_average_remainder(tscx_config* c, int average) {
  return guarded([&] {
    require(c, "config");
    c->config.remainder = average ? tscx::Remainder::average : tscx::Remainder::discard;
  });
}

tscx_status tscx_config_set_fixed_tolerance(tscx_config* c, int fixed) {
  return guarded([&] {
    require(c, "config");
    c->config.tolerance = fixed ? tscx::SweepTolerance::fixed_from_input : tscx::SweepTolerance::per_scale;
  });
}

tscx_status tscx_config_validate(const tscx_config* c) {
  return guarded([&] {
    require(c, "config");
    c->config.validate();
  });
}

tscx_status tscx_analyze(const tscx_series* const* inputs, size_t n, const tscx_config* c, tscx_report** out) {
  return guarded([&] {
    require(c && out, "config/out");
    *out = new tscx_report{tscx::analyze(collect(inputs, n), c->config)};
  });
}

tscx_status tscx_mse(const tscx_series* const* inputs, size_t n, const tscx_config* c, tscx_report** out) {
  return guarded([&] {
    require(c && out, "config/out");
    *out = new tscx_report{tscx::mse(collect(inputs, n), c->config)};
  });
}

tscx_status tscx_compare_groups(const tscx_series* const* a, size_t na, const tscx_series* const* b, size_t nb,
                                const tscx_config* c, const char* name_a, const char* name_b, tscx_report** out) {
  return guarded([&] {
    require(c && out, "config/out");
    *out = new tscx_report{tscx::compare_groups(collect(a, na), collect(b, nb), c->config, name_a ? name_a : "A",
                                                name_b ? name_b : "B")};
  });
}

tscx_status tscx_reproduce(const char* experiment, const tscx_config* c, const char* data_dir,
                           tscx_reproduction** out) {
  return guarded([&] {
    require(experiment && c && out, "experiment/config/out");
    std::optional<std::filesystem::path> dir;
    if (data_dir && *data_dir) dir = data_dir;
    auto result = tscx::reproduce(tscx::parse_experiment(experiment), c->config, dir);
    auto* r = new tscx_reproduction{std::move(result), {}};
    r->report.report = r->result.report;
    *out = r;
  });
}

int tscx_reproduction_skipped(const tscx_reproduction* r) { return r && r->result.skipped ? 1 : 0; }

const char* tscx_reproduction_skip_reason(const tscx_reproduction* r) {
  return r ? r->result.skip_reason.c_str() : "";
}

size_t tscx_reproduction_check_count(const tscx_reproduction* r) { return r ? r->result.checks.size() : 0; }

tscx_status tscx_reproduction_check(const tscx_reproduction* r, size_t i, const char** name, int* passed,
                                    const char** detail) {
  return guarded([&] {
    require(r, "reproduction");
    if (i >= r->result.checks.size()) throw tscx::Error(tscx::ErrorKind::usage, "check index out of range");
    const auto& c = r->result.checks[i];
    if (name) *name = c.name.c_str();
    if (passed) *passed = c.passed ? 1 : 0;
    if (detail) *detail = c.detail.c_str();
  });
}

const tscx_report* tscx_reproduction_report(const tscx_reproduction* r) { return r ? &r->report : nullptr; }

void tscx_reproduction_free(tscx_reproduction* r) { delete r; }

tscx_status tscx_report_create(tscx_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tscx_report{};
  });
}

tscx_status tscx_report_add_input_error(tscx_report* r, const char* label, const tscx_config* c, int per_scale,
                                        tscx_status kind, const char* message) {
  return guarded([&] {
    require(r && label && c && message, "report/label/config/message");
    const std::vector<std::size_t> scales = per_scale ? c->config.scales : std::vector<std::size_t>{1};
    for (std::size_t scale : scales) {
      for (auto metric : c->config.metrics) {
        tscx::MetricResult res;
        res.name = std::string(tscx::to_string(metric));
        res.error = message;
        res.error_kind = to_kind(kind);
        r->report.add_result(label, scale, res);
      }
    }
  });
}

tscx_status tscx_report_merge(tscx_report* dst, const tscx_report* src) {
  return guarded([&] {
    require(dst && src, "dst/src");
    dst->report.merge(src->report);
  });
}

size_t tscx_report_row_count(const tscx_report* r) { return r ? r->report.size() : 0; }

size_t tscx_report_failed_rows(const tscx_report* r, tscx_status* first_kind) {
  if (first_kind) *first_kind = TSCX_OK;
  if (!r) return 0;
  std::size_t failed = 0;
  for (const auto& row : r->report.rows()) {
    if (const auto kind = tscx::row_error(row)) {
      if (failed++ == 0 && first_kind) *first_kind = static_cast<tscx_status>(*kind);
    }
  }
  return failed;
}

tscx_status tscx_report_render(const tscx_report* r, const char* format, char** out) {
  return guarded([&] {
    require(r && format && out, "report/format/out");
    *out = dup_string(tscx::render_report(r->report, tscx::parse_report_format(format)));
  });
}

tscx_status tscx_report_write(const tscx_report* r, const char* format, const char* path) {
  return guarded([&] {
    require(r && format && path, "report/format/path");
    tscx::write_report(r->report, tscx::parse_report_format(format), path);
  });
}

tscx_status tscx_report_read(const char* path, tscx_report** out) {
  return guarded([&] {
    require(path && out, "path/out");
    *out = new tscx_report{tscx::read_report(path)};
  });
}

tscx_status tscx_report_render_plot(const tscx_report* r, const char* kind, char** out) {
  return guarded([&] {
    require(r && kind && out, "report/kind/out");
    *out = dup_string(tscx::render_plot(r->report, tscx::parse_plot_kind(kind)));
  });
}

tscx_status tscx_report_write_plot(const tscx_report* r, const char* kind, const char* path) {
  return guarded([&] {
    require(r && kind && path, "report/kind/path");
    tscx::write_plot(r->report, tscx::parse_plot_kind(kind), path);
  });
}

void tscx_report_free(tscx_report* r) { delete r; }

void tscx_string_free(char* s) { std::free(s); }

}  // extern "C"
