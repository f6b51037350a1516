#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "support/temp_dir.hpp"
#include "tscx/tscx.h"

TEST_CASE("series handles", "[capi]") {
  const std::vector<double> v{1, 2, 3, 4, 5, 6};
  tscx_series* s = nullptr;
  REQUIRE(tscx_series_create(v.data(), v.size(), "six", &s) == TSCX_OK);
  CHECK(tscx_series_length(s) == 6);
  CHECK(std::string(tscx_series_label(s)) == "six");

  tscx_series* cg = nullptr;
  REQUIRE(tscx_series_coarse_grain(s, 2, &cg) == TSCX_OK);
  std::vector<double> out(8, -1.0);
  CHECK(tscx_series_copy_values(cg, out.data(), out.size()) == 3);
  CHECK(out[0] == 1.5);
  CHECK(out[2] == 5.5);
  CHECK(out[3] == -1.0);
  tscx_series_free(cg);

  CHECK(tscx_series_coarse_grain(s, 0, &cg) == TSCX_ERR_USAGE);
  CHECK_FALSE(std::string(tscx_last_error()).empty());
  tscx_series_free(s);

  CHECK(tscx_series_create(nullptr, 0, "none", &s) == TSCX_ERR_DATA);
  CHECK(tscx_series_create(v.data(), v.size(), "x", nullptr) == TSCX_ERR_USAGE);
}

TEST_CASE("metrics through the C API", "[capi]") {
  std::vector<double> up(1000);
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<double>(i);
  tscx_series* s = nullptr;
  REQUIRE(tscx_series_create(up.data(), up.size(), "up", &s) == TSCX_OK);

  tscx_permtest_result pt{};
  REQUIRE(tscx_permtest(s, 5, &pt) == TSCX_OK);
  CHECK(pt.chi_square == 23800.0);
  CHECK(pt.df == 119);
  CHECK(pt.low_expected_warning == 1);

  double pe = -1;
  REQUIRE(tscx_permen(s, 5, 1, &pe) == TSCX_OK);
  CHECK(pe == 0.0);

  tscx_runs_result rr{};
  REQUIRE(tscx_runs(s, TSCX_RUNS_MEDIAN, &rr) == TSCX_OK);
  CHECK(rr.runs == 2);
  CHECK(rr.z < 0.0);

  tscx_sampen_result se{};
  CHECK(tscx_sampen(s, 2, 0.0, 0, &se) == TSCX_ERR_USAGE);
  tscx_series_free(s);

  const std::vector<double> a{0, 0, 1, 1}, b{10, 10, 11, 11};
  tscx_ttest_result tt{};
  REQUIRE(tscx_welch(a.data(), a.size(), b.data(), b.size(), &tt) == TSCX_OK);
  CHECK(tt.p_value < 0.001);
  CHECK(tscx_chi_square_sf(0.0, 3) == 1.0);
  CHECK(tscx_normal_sf(0.0) == 0.5);
}

TEST_CASE("config, commands and reports", "[capi]") {
  tscx_config* c = nullptr;
  REQUIRE(tscx_config_create(&c) == TSCX_OK);
  CHECK(tscx_config_set_metrics(c, "permen,bogus") == TSCX_ERR_USAGE);
  REQUIRE(tscx_config_set_metrics(c, "sampen,permen") == TSCX_OK);
  const std::size_t scales[] = {1, 2};
  REQUIRE(tscx_config_set_scales(c, scales, 2) == TSCX_OK);
  CHECK(tscx_config_set_runs_variant(c, "sideways") == TSCX_ERR_USAGE);
  const std::size_t bad_scales[] = {2, 1};
  REQUIRE(tscx_config_set_scales(c, bad_scales, 2) == TSCX_OK);
  CHECK(tscx_config_validate(c) == TSCX_ERR_USAGE);
  REQUIRE(tscx_config_set_scales(c, scales, 2) == TSCX_OK);

  tscx_series* s = nullptr;
  REQUIRE(tscx_series_generate(R"({"kind":"normal","length":500,"seed":3})", &s) == TSCX_OK);
  const tscx_series* inputs[] = {s};
  tscx_report* rep = nullptr;
  REQUIRE(tscx_mse(inputs, 1, c, &rep) == TSCX_OK);
  CHECK(tscx_report_row_count(rep) == 4);

  REQUIRE(tscx_report_add_input_error(rep, "missing", c, 1, TSCX_ERR_DATA, "cannot open missing.txt") == TSCX_OK);
  CHECK(tscx_report_row_count(rep) == 8);
  tscx_status first = TSCX_OK;
  CHECK(tscx_report_failed_rows(rep, &first) == 4);
  CHECK(first == TSCX_ERR_DATA);

  char* csv = nullptr;
  REQUIRE(tscx_report_render(rep, "csv", &csv) == TSCX_OK);
  CHECK(std::string(csv).rfind("label,scale,metric,value,statistic,df,p_value,warnings\n", 0) == 0);
  CHECK(std::string(csv).find("missing,2,permen,,,,,error: cannot open missing.txt") != std::string::npos);
  tscx_string_free(csv);
  CHECK(tscx_report_render(rep, "xml", &csv) == TSCX_ERR_USAGE);

  TempDir dir;
  const auto path = (dir.path() / "r.json").string();
  REQUIRE(tscx_report_write(rep, "json", path.c_str()) == TSCX_OK);
  tscx_report* back = nullptr;
  REQUIRE(tscx_report_read(path.c_str(), &back) == TSCX_OK);
  CHECK(tscx_report_row_count(back) == 8);
  const auto svg = (dir.path() / "r.svg").string();
  CHECK(tscx_report_write_plot(back, "line_by_scale", svg.c_str()) == TSCX_OK);
  CHECK(tscx_report_write_plot(back, "box_by_group", svg.c_str()) == TSCX_ERR_USAGE);
  tscx_report_free(back);
  tscx_report_free(rep);

  const tscx_series* group[] = {s, s};
  CHECK(tscx_compare_groups(group, 1, group, 2, c, "A", "B", &rep) == TSCX_ERR_USAGE);
  tscx_series_free(s);
  tscx_config_free(c);
}

TEST_CASE("reproduction handle", "[capi]") {
  tscx_config* c = nullptr;
  REQUIRE(tscx_config_create(&c) == TSCX_OK);
  REQUIRE(tscx_config_set_replications(c, 2) == TSCX_OK);

  tscx_reproduction* r = nullptr;
  REQUIRE(tscx_reproduce("santafe", c, nullptr, &r) == TSCX_OK);
  CHECK(tscx_reproduction_skipped(r) == 1);
  CHECK(tscx_reproduction_check_count(r) == 0);
  tscx_reproduction_free(r);

  REQUIRE(tscx_reproduce("table2", c, nullptr, &r) == TSCX_OK);
  CHECK(tscx_reproduction_skipped(r) == 0);
  REQUIRE(tscx_reproduction_check_count(r) > 0);
  const char* name = nullptr;
  const char* detail = nullptr;
  int passed = -1;
  REQUIRE(tscx_reproduction_check(r, 0, &name, &passed, &detail) == TSCX_OK);
  CHECK(std::string(name) == "r=3.5 sampen");
  CHECK(passed == 1);
  CHECK(tscx_reproduction_check(r, 1000, &name, &passed, &detail) == TSCX_ERR_USAGE);
  CHECK(tscx_report_row_count(tscx_reproduction_report(r)) >= 16);
  tscx_reproduction_free(r);

  CHECK(tscx_reproduce("table9", c, nullptr, &r) == TSCX_ERR_USAGE);
  tscx_config_free(c);
}
