/* C interface to the tscx time-series complexity library.
 *
 * Every fallible call returns a tscx_status; on failure the message is
 * available from tscx_last_error() until the next call on the same thread.
 * Handles are opaque and owned by the caller; release them with the
 * matching _free function. Passing NULL to a _free function is allowed.
 */
#ifndef TSCX_H
#define TSCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TSCX_BUILDING)
#    define TSCX_API __declspec(dllexport)
#  else
#    define TSCX_API __declspec(dllimport)
#  endif
#else
#  define TSCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum tscx_status {
  TSCX_OK = 0,
  TSCX_ERR_USAGE = 1,
  TSCX_ERR_DATA = 2,
  TSCX_ERR_NUMERICAL = 3
} tscx_status;

typedef struct tscx_series tscx_series;
typedef struct tscx_config tscx_config;
typedef struct tscx_report tscx_report;
typedef struct tscx_reproduction tscx_reproduction;

TSCX_API const char* tscx_last_error(void);
TSCX_API const char* tscx_version(void);

/* ---- series ---- */

TSCX_API tscx_status tscx_series_create(const double* values, size_t n, const char* label, tscx_series** out);
/* csv != 0 selects csv_column; column is a header name or 0-based index (NULL = first). */
TSCX_API tscx_status tscx_series_read(const char* path, int csv, const char* column, int skip_header,
                                      tscx_series** out);
/* GeneratorSpec JSON text. */
TSCX_API tscx_status tscx_series_generate(const char* spec_json, tscx_series** out);
TSCX_API tscx_status tscx_series_coarse_grain(const tscx_series* s, size_t scale, tscx_series** out);
TSCX_API tscx_status tscx_series_write(const tscx_series* s, const char* path);
TSCX_API size_t tscx_series_length(const tscx_series* s);
TSCX_API const char* tscx_series_label(const tscx_series* s);
/* Copies min(length, capacity) values; returns the series length. */
TSCX_API size_t tscx_series_copy_values(const tscx_series* s, double* out, size_t capacity);
TSCX_API void tscx_series_free(tscx_series* s);

/* ---- metrics ---- */

typedef struct tscx_sampen_result {
  double value;
  uint64_t a_count;
  uint64_t b_count;
  double radius;
} tscx_sampen_result;

typedef struct tscx_permtest_result {
  double chi_square;
  size_t df;
  double p_value;
  size_t group_count;
  double expected_per_cell;
  int low_expected_warning;
} tscx_permtest_result;

typedef enum tscx_runs_variant { TSCX_RUNS_MEDIAN = 0, TSCX_RUNS_UP_DOWN = 1 } tscx_runs_variant;

typedef struct tscx_runs_result {
  double z;
  double p_value;
  size_t runs;
  size_t n_effective;
} tscx_runs_result;

typedef struct tscx_ttest_result {
  double t_statistic;
  double df;
  double p_value;
  double mean_a;
  double mean_b;
} tscx_ttest_result;

/* absolute_r == 0: radius = r * SD of the series. */
TSCX_API tscx_status tscx_sampen(const tscx_series* s, size_t m, double r, int absolute_r, tscx_sampen_result* out);
TSCX_API tscx_status tscx_permen(const tscx_series* s, size_t n, int normalize, double* out);
TSCX_API tscx_status tscx_permtest(const tscx_series* s, size_t t, tscx_permtest_result* out);
TSCX_API tscx_status tscx_runs(const tscx_series* s, tscx_runs_variant variant, tscx_runs_result* out);
TSCX_API tscx_status tscx_welch(const double* a, size_t na, const double* b, size_t nb, tscx_ttest_result* out);
TSCX_API double tscx_chi_square_sf(double x, double df);
TSCX_API double tscx_normal_sf(double z);

/* ---- analysis configuration ---- */

TSCX_API tscx_status tscx_config_create(tscx_config** out);
TSCX_API void tscx_config_free(tscx_config* c);
/* Comma-separated subset of sampen, permen, permtest, runstest. */
TSCX_API tscx_status tscx_config_set_metrics(tscx_config* c, const char* list);
TSCX_API tscx_status tscx_config_set_sampen(tscx_config* c, size_t m, double r_factor);
TSCX_API tscx_status tscx_config_set_permen(tscx_config* c, size_t n);
TSCX_API tscx_status tscx_config_set_permtest(tscx_config* c, size_t t);
/* "above_below_median" (or "median") / "up_down". */
TSCX_API tscx_status tscx_config_set_runs_variant(tscx_config* c, const char* variant);
TSCX_API tscx_status tscx_config_set_scales(tscx_config* c, const size_t* scales, size_t n);
TSCX_API tscx_status tscx_config_set_seed(tscx_config* c, uint64_t seed);
TSCX_API tscx_status tscx_config_set_replications(tscx_config* c, size_t replications);
/* fixed != 0 keeps the input series' radius at every scale. */
TSCX_API tscx_status tscx_config_set_fixed_tolerance(tscx_config* c, int fixed);
/* Nonzero: coarse-graining keeps a short final block (its mean) instead of dropping it. */
TSCX_API tscx_status tscx_config_set_average_remainder(tscx_config* c, int average);
TSCX_API tscx_status tscx_config_validate(const tscx_config* c);

/* ---- commands ---- */

TSCX_API tscx_status tscx_analyze(const tscx_series* const* inputs, size_t n, const tscx_config* c,
                                  tscx_report** out);
TSCX_API tscx_status tscx_mse(const tscx_series* const* inputs, size_t n, const tscx_config* c, tscx_report** out);
TSCX_API tscx_status tscx_compare_groups(const tscx_series* const* a, size_t na, const tscx_series* const* b,
                                         size_t nb, const tscx_config* c, const char* name_a, const char* name_b,
                                         tscx_report** out);

/* Experiments: table1, table2, table3_logistic, santafe, arma_table4, arma_table5.
 * data_dir may be NULL. */
TSCX_API tscx_status tscx_reproduce(const char* experiment, const tscx_config* c, const char* data_dir,
                                    tscx_reproduction** out);
TSCX_API int tscx_reproduction_skipped(const tscx_reproduction* r);
TSCX_API const char* tscx_reproduction_skip_reason(const tscx_reproduction* r);
TSCX_API size_t tscx_reproduction_check_count(const tscx_reproduction* r);
TSCX_API tscx_status tscx_reproduction_check(const tscx_reproduction* r, size_t i, const char** name, int* passed,
                                             const char** detail);
/* Borrowed; valid while r lives. */
TSCX_API const tscx_report* tscx_reproduction_report(const tscx_reproduction* r);
TSCX_API void tscx_reproduction_free(tscx_reproduction* r);

/* ---- reports ---- */

TSCX_API tscx_status tscx_report_create(tscx_report** out);
/* One error cell per configured metric (and per configured scale when per_scale != 0). */
TSCX_API tscx_status tscx_report_add_input_error(tscx_report* r, const char* label, const tscx_config* c,
                                                 int per_scale, tscx_status kind, const char* message);
TSCX_API tscx_status tscx_report_merge(tscx_report* dst, const tscx_report* src);
TSCX_API size_t tscx_report_row_count(const tscx_report* r);
/* Number of failed cells; *first_kind receives the kind of the first one (TSCX_OK if none). */
TSCX_API size_t tscx_report_failed_rows(const tscx_report* r, tscx_status* first_kind);
/* format: "csv" or "json". The string is released with tscx_string_free. */
TSCX_API tscx_status tscx_report_render(const tscx_report* r, const char* format, char** out);
TSCX_API tscx_status tscx_report_write(const tscx_report* r, const char* format, const char* path);
TSCX_API tscx_status tscx_report_read(const char* path, tscx_report** out);
/* kind: line_by_scale, grouped_bars or box_by_group. */
TSCX_API tscx_status tscx_report_render_plot(const tscx_report* r, const char* kind, char** out);
TSCX_API tscx_status tscx_report_write_plot(const tscx_report* r, const char* kind, const char* path);
TSCX_API void tscx_report_free(tscx_report* r);

TSCX_API void tscx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TSCX_H */
