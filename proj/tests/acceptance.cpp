// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exit status is
// nonzero when any criterion fails.
//
// Optional data: $TSCX_DATA_DIR/santafe.txt (or another name accepted by the
// santafe experiment) and $TSCX_DATA_DIR/chf/*, $TSCX_DATA_DIR/nsr/* RR files.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "tscx/analysis.hpp"
#include "tscx/entropy.hpp"
#include "tscx/generators.hpp"
#include "tscx/ingest.hpp"
#include "tscx/ordinal.hpp"
#include "tscx/plot.hpp"
#include "tscx/randomness.hpp"
#include "tscx/report.hpp"
#include "tscx/reproduce.hpp"
#include "tscx/rng.hpp"
#include "tscx/special.hpp"

namespace fs = std::filesystem;

namespace {

constexpr double kTable2Seconds = 5.0;
constexpr double kMseSeconds = 10.0;
constexpr std::size_t kTable1Replications = 30;
constexpr std::size_t kArmaReplications = 10;
constexpr std::size_t kOracleSeries = 200;
constexpr std::size_t kOracleMaxLength = 300;
constexpr double kChiSquareSfTol = 5e-4;
constexpr double kNormalSfTol = 1e-6;
constexpr double kWelchAlpha = 0.05;

enum class Outcome { pass, fail, skip };

struct Verdict {
  Outcome outcome = Outcome::pass;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      outcome = Outcome::fail;
      notes.push_back(what);
    }
  }
  static Verdict skipped(std::string why) {
    Verdict v;
    v.outcome = Outcome::skip;
    v.notes.push_back(std::move(why));
    return v;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::optional<fs::path> data_dir() {
  const char* env = std::getenv("TSCX_DATA_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return fs::path(env);
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

// Every check accepted by keep() must pass.
void take_checks(Verdict& v, const tscx::Reproduction& r, const std::function<bool(const tscx::Check&)>& keep) {
  std::size_t used = 0;
  for (const auto& c : r.checks) {
    if (!keep(c)) continue;
    ++used;
    v.require(c.passed, c.name + ": " + c.detail);
  }
  v.require(used > 0, "no checks selected");
}

Verdict clean_logistic() {
  tscx::AnalysisConfig c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = tscx::reproduce(tscx::Experiment::table2, c);
  const double elapsed = seconds_since(t0);
  Verdict v;
  take_checks(v, r, [](const tscx::Check& k) { return k.name.find("noise") == std::string::npos; });
  v.require(elapsed < kTable2Seconds, "runtime " + fmt("%.2f s", elapsed));
  return v;
}

Verdict logistic_mse() {
  tscx::AnalysisConfig c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = tscx::reproduce(tscx::Experiment::table3_logistic, c);
  const double elapsed = seconds_since(t0);
  Verdict v;
  take_checks(v, r, [](const tscx::Check& k) { return starts_with(k.name, "Logistic map r=3.7 scale"); });
  v.require(elapsed < kMseSeconds, "runtime " + fmt("%.2f s", elapsed));
  return v;
}

tscx::Reproduction iid_table() {
  tscx::AnalysisConfig c;
  c.replications = kTable1Replications;
  return tscx::reproduce(tscx::Experiment::table1, c);
}

Verdict iid_bands(const tscx::Reproduction& r) {
  Verdict v;
  take_checks(v, r, [](const tscx::Check& k) { return k.name.find("non-increasing") == std::string::npos; });
  return v;
}

Verdict iid_monotone(const tscx::Reproduction& r) {
  Verdict v;
  take_checks(v, r, [](const tscx::Check& k) { return k.name.find("non-increasing") != std::string::npos; });
  return v;
}

Verdict arma_ordering() {
  tscx::AnalysisConfig c;
  c.replications = kArmaReplications;
  Verdict v;
  take_checks(v, tscx::reproduce(tscx::Experiment::arma_table4, c), [](const tscx::Check&) { return true; });
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  tscx::Xoshiro256 rng(20240601);
  std::size_t sampen_mismatch = 0, permen_mismatch = 0;
  for (std::size_t k = 0; k < kOracleSeries; ++k) {
    const std::size_t m = 1 + k % 3;
    const std::size_t len = m + 2 + static_cast<std::size_t>(rng.uniform() * (kOracleMaxLength - m - 1));
    std::vector<double> x(len);
    // Every third series is quantized so ties and exact-radius distances occur.
    const bool coarse = k % 3 == 0;
    for (auto& e : x) e = coarse ? std::floor(rng.uniform() * 8.0) : rng.normal();
    const double radius = coarse ? 1.0 : 0.1 + 0.4 * rng.uniform();
    const auto got = tscx::sample_entropy_counts(x, m, radius);
    const auto want = oracle::sampen_pairs(x, m, radius);
    if (got.a != want.a || got.b != want.b) ++sampen_mismatch;
  }
  for (std::size_t k = 0; k < kOracleSeries; ++k) {
    const std::size_t n = 3 + k % 3;
    const std::size_t len = n + static_cast<std::size_t>(rng.uniform() * (kOracleMaxLength - n));
    std::vector<double> x(len);
    const bool coarse = k % 2 == 0;
    for (auto& e : x) e = coarse ? std::floor(rng.uniform() * 4.0) : rng.uniform();
    const auto hist = tscx::ordinal_histogram(x, n, tscx::Windowing::overlapping);
    const auto want = oracle::pattern_counts(x, n, 1);
    bool same = hist.size() == tscx::factorial(n);
    for (std::size_t p = 0; same && p < hist.size(); ++p) {
      const auto it = want.find(p);
      same = hist[p] == (it == want.end() ? 0 : it->second);
    }
    if (!same) ++permen_mismatch;
  }
  v.require(sampen_mismatch == 0, std::to_string(sampen_mismatch) + " SampEn count mismatches");
  v.require(permen_mismatch == 0, std::to_string(permen_mismatch) + " PermEn histogram mismatches");
  return v;
}

Verdict closed_forms() {
  Verdict v;
  for (std::size_t t : {3u, 5u}) {
    for (std::size_t g : {10u, 100u, 200u}) {
      std::vector<double> up(g * t);
      for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<double>(i);
      const double want = static_cast<double>(g) * static_cast<double>(tscx::factorial(t) - 1);
      const double got = tscx::permutation_test(tscx::Series(up), t).chi_square;
      v.require(got == want, "single-pattern chi-square t=" + std::to_string(t) + " G=" + std::to_string(g) + ": " +
                                 fmt("%.6f", got));
    }
  }
  tscx::SampEnParams flat;
  flat.r_mode = tscx::ToleranceMode::absolute;
  const auto se = tscx::sample_entropy(tscx::Series(std::vector<double>(100, 1.5)), flat);
  v.require(se.value == 0.0 && se.a_count == se.b_count, "constant-series SampEn " + fmt("%g", se.value));

  std::vector<double> up(500), down(500);
  for (std::size_t i = 0; i < up.size(); ++i) {
    up[i] = static_cast<double>(i);
    down[i] = -static_cast<double>(i);
  }
  v.require(tscx::permutation_entropy(tscx::Series(up)) == 0.0, "increasing-series PermEn");
  v.require(tscx::permutation_entropy(tscx::Series(down)) == 0.0, "decreasing-series PermEn");

  const double chi = tscx::chi_square_sf(3.841, 1);
  v.require(std::abs(chi - 0.05) <= kChiSquareSfTol, "chi_square_sf(3.841,1) = " + fmt("%.8f", chi));
  v.require(std::abs(chi - oracle::chi_square_upper_tail(3.841, 1)) <= kChiSquareSfTol,
            "chi_square_sf against quadrature");
  const double z = tscx::normal_sf(1.959964);
  v.require(std::abs(z - 0.025) <= kNormalSfTol, "normal_sf(1.959964) = " + fmt("%.10f", z));
  v.require(std::abs(z - oracle::normal_upper_tail(1.959964)) <= kNormalSfTol, "normal_sf against quadrature");
  return v;
}

Verdict santafe() {
  const auto dir = data_dir();
  if (!dir || !tscx::find_santafe_file(*dir)) return Verdict::skipped("no Santa Fe data file under TSCX_DATA_DIR");
  Verdict v;
  take_checks(v, tscx::reproduce(tscx::Experiment::santafe, tscx::AnalysisConfig{}, *dir),
              [](const tscx::Check&) { return true; });
  return v;
}

std::vector<tscx::Series> read_group(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<tscx::Series> out;
  for (const auto& f : files) {
    tscx::SeriesFile sf;
    sf.path = f;
    out.push_back(tscx::read_series(sf));
  }
  return out;
}

Verdict heart_groups() {
  const auto dir = data_dir();
  if (!dir || !fs::is_directory(*dir / "chf") || !fs::is_directory(*dir / "nsr")) {
    return Verdict::skipped("no chf/ and nsr/ RR directories under TSCX_DATA_DIR");
  }
  const auto rep = tscx::compare_groups(read_group(*dir / "chf"), read_group(*dir / "nsr"), tscx::AnalysisConfig{},
                                        "CHF", "NSR");
  Verdict v;
  for (const char* m : {"sampen", "permen", "permtest", "runstest"}) {
    const auto* row = rep.find("welch", 1, m);
    if (row == nullptr || !row->p_value) {
      v.require(false, std::string(m) + ": no Welch p-value");
      continue;
    }
    const double p = *row->p_value;
    const bool separates = std::string_view(m) == "sampen" || std::string_view(m) == "runstest";
    v.require(separates ? p < kWelchAlpha : p >= kWelchAlpha, std::string(m) + " Welch p = " + fmt("%.4g", p));
  }
  return v;
}

// Renders every output a run can produce.
std::vector<std::string> outputs(std::uint64_t seed) {
  tscx::AnalysisConfig c;
  c.seed = seed;
  std::vector<tscx::Series> in;
  in.push_back(tscx::generate_iid(tscx::IidDistribution::normal, 800, tscx::derive_seed(seed, 1)));
  in.push_back(tscx::arma_simulate(std::vector<double>{0.9}, {}, 800, tscx::kDefaultArmaBurnIn,
                                   tscx::derive_seed(seed, 2)));
  in.push_back(tscx::reference_logistic(3.7));
  std::vector<std::string> out;
  const auto sweep = tscx::mse(in, c);
  const auto groups = tscx::compare_groups(std::vector<tscx::Series>(in.begin(), in.begin() + 2),
                                           std::vector<tscx::Series>(in.begin() + 1, in.end()), c);
  const auto table = tscx::reproduce(tscx::Experiment::table2, c).report;
  for (const auto* r : {&sweep, &groups, &table}) {
    out.push_back(tscx::render_report(*r, tscx::ReportFormat::csv));
    out.push_back(tscx::render_report(*r, tscx::ReportFormat::json));
  }
  out.push_back(tscx::render_plot(sweep, tscx::PlotKind::line_by_scale));
  out.push_back(tscx::render_plot(table, tscx::PlotKind::grouped_bars));
  out.push_back(tscx::render_plot(groups, tscx::PlotKind::box_by_group));
  return out;
}

Verdict determinism() {
  Verdict v;
  const auto a = outputs(7);
  const auto b = outputs(7);
  for (std::size_t i = 0; i < a.size(); ++i) v.require(a[i] == b[i], "output " + std::to_string(i) + " differs");
  return v;
}

}  // namespace

int main() {
  std::printf("tscx acceptance suite (TSCX_DATA_DIR=%s)\n", data_dir() ? data_dir()->string().c_str() : "unset");
  const auto table1 = iid_table();
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"clean logistic scores at scale 1", clean_logistic},
      {"logistic r=3.7 multiscale scores", logistic_mse},
      {"iid score bands and null p-values", [&] { return iid_bands(table1); }},
      {"iid PermEn non-increasing across scales", [&] { return iid_monotone(table1); }},
      {"ARMA complexity ordering", arma_ordering},
      {"optimized counts equal brute force", oracle_equivalence},
      {"closed-form checks", closed_forms},
      {"Santa Fe laser scores and noise ordering", santafe},
      {"CHF versus NSR group comparison", heart_groups},
      {"byte-identical repeated output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.outcome = Outcome::fail;
      v.notes.push_back(std::string("exception: ") + e.what());
    }
    const char* tag = v.outcome == Outcome::pass ? "PASS" : v.outcome == Outcome::fail ? "FAIL" : "SKIP";
    std::printf("%s %zu %s\n", tag, i + 1, criteria[i].first);
    for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
    failed += v.outcome == Outcome::fail;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
