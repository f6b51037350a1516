#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "tscx/error.hpp"
#include "tscx/generators.hpp"
#include "tscx/randomness.hpp"
#include "tscx/rng.hpp"
#include "tscx/series.hpp"
#include "tscx/special.hpp"

using Catch::Approx;
using tscx::Series;

TEST_CASE("chi-square survival function", "[special]") {
  for (double k : {1.0, 2.0, 5.0, 119.0}) CHECK(tscx::chi_square_sf(0.0, k) == 1.0);
  CHECK(tscx::chi_square_sf(3.841, 1) == Approx(0.05).margin(5e-4));
  CHECK(tscx::chi_square_sf(108.3935, 119) == Approx(0.747).margin(5e-3));

  SECTION("matches quadrature") {
    for (double df : {1.0, 2.0, 3.0, 7.0, 23.0, 119.0}) {
      for (double q : {0.2, 0.8, 1.0, 1.5, 2.5}) {
        const double x = q * df;
        CAPTURE(df, x);
        CHECK(tscx::chi_square_sf(x, df) == Approx(oracle::chi_square_upper_tail(x, df)).margin(1e-8));
      }
    }
  }
  SECTION("deep tail stays positive and ordered") {
    const double a = tscx::chi_square_sf(1200.0, 119);
    const double b = tscx::chi_square_sf(1300.0, 119);
    CHECK(a > 0.0);
    CHECK(b < a);
    CHECK(a < 1e-100);
  }
}

TEST_CASE("normal survival function", "[special]") {
  CHECK(tscx::normal_sf(0.0) == 0.5);
  CHECK(tscx::normal_sf(1.959964) == Approx(0.025).margin(1e-6));
  CHECK(tscx::normal_sf(1.959964) == Approx(oracle::normal_upper_tail(1.959964)).margin(1e-10));
  tscx::Xoshiro256 rng(12);
  for (int i = 0; i < 100; ++i) {
    const double z = 6.0 * rng.normal();
    CHECK(tscx::normal_sf(z) + tscx::normal_sf(-z) == Approx(1.0).margin(1e-14));
  }
  CHECK(tscx::normal_sf(10.0) > 0.0);
}

TEST_CASE("student t tail against quadrature", "[special]") {
  for (double df : {1.0, 2.5, 4.0, 17.3, 98.0}) {
    for (double t : {0.1, 0.7, 1.96, 3.5}) {
      CAPTURE(df, t);
      CHECK(tscx::student_t_sf(t, df) == Approx(oracle::student_upper_tail(t, df)).margin(1e-8));
    }
  }
  CHECK(tscx::student_t_sf(0.0, 5) == 0.5);
  CHECK(tscx::student_t_sf(-1.0, 5) == Approx(1.0 - tscx::student_t_sf(1.0, 5)));
}

TEST_CASE("permutation test", "[randomness]") {
  SECTION("single pattern closed form") {
    for (std::size_t t : {3u, 5u}) {
      for (std::size_t groups : {10u, 100u, 200u}) {
        std::vector<double> v(groups * t);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
        const auto res = tscx::permutation_test(Series(v), t);
        const double tf = t == 3 ? 6.0 : 120.0;
        CHECK(res.group_count == groups);
        CHECK(res.chi_square == static_cast<double>(groups) * (tf - 1.0));
        CHECK(res.df == static_cast<std::size_t>(tf) - 1);
      }
    }
  }
  SECTION("increasing series of 1000") {
    std::vector<double> v(1000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
    const auto res = tscx::permutation_test(Series(v), 5);
    CHECK(res.chi_square == 23800.0);
    CHECK(res.p_value < 1e-100);
    CHECK(res.low_expected_warning);
  }
  SECTION("trailing partial group is dropped") {
    std::vector<double> v(23);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i % 7);
    CHECK(tscx::permutation_test(Series(v), 5).group_count == 4);
  }
  SECTION("chi-square from observed counts") {
    tscx::Xoshiro256 rng(8);
    std::vector<double> v(600);
    for (auto& x : v) x = rng.normal();
    const auto res = tscx::permutation_test(Series(v), 3);
    const double expected = 200.0 / 6.0;
    double chi = 0.0;
    for (auto o : res.observed) chi += (static_cast<double>(o) - expected) * (static_cast<double>(o) - expected) / expected;
    CHECK(res.chi_square == Approx(chi).epsilon(1e-12));
    CHECK_FALSE(res.low_expected_warning);
  }
  SECTION("iid uniform stays in its null band") {
    int accepted = 0;
    for (std::uint64_t k = 0; k < 30; ++k) {
      const auto res = tscx::permutation_test(tscx::generate_iid(tscx::IidDistribution::uniform, 1000, 500 + k), 5);
      CHECK(res.chi_square >= 80.0);
      CHECK(res.chi_square <= 180.0);
      if (res.p_value > 0.01) ++accepted;
    }
    CHECK(accepted >= 28);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(tscx::permutation_test(Series({1, 2, 3}), 5), tscx::Error);
    CHECK_THROWS_AS(tscx::permutation_test(Series({1, 2, 3}), 1), tscx::Error);
  }
}

TEST_CASE("runs test", "[randomness]") {
  SECTION("alternating sequence") {
    std::vector<double> v;
    for (int i = 0; i < 10; ++i) {
      v.push_back(1);
      v.push_back(2);
    }
    const auto res = tscx::runs_test(Series(v));
    CHECK(res.n_positive == 10);
    CHECK(res.n_negative == 10);
    CHECK(res.runs == 20);
    const double sigma = std::sqrt(36000.0 / 7600.0);
    CHECK(res.z == Approx(9.0 / sigma).epsilon(1e-12));
    CHECK(res.p_value == Approx(2.0 * tscx::normal_sf(9.0 / sigma)));
  }
  SECTION("sign convention") {
    std::vector<double> blocks;
    for (int i = 0; i < 20; ++i) blocks.push_back(i < 10 ? 0.0 : 1.0);
    CHECK(tscx::runs_test(Series(blocks)).z < 0.0);
    std::vector<double> alt;
    for (int i = 0; i < 20; ++i) alt.push_back(i % 2);
    CHECK(tscx::runs_test(Series(alt)).z > 0.0);
  }
  SECTION("median ties are dropped") {
    const auto res = tscx::runs_test(Series({1, 2, 3, 2, 3, 1, 2}));
    CHECK(res.n_effective == 4);
  }
  SECTION("up-down variant") {
    // Differences +,+,-,-,+,-: four runs over six retained differences.
    const auto res = tscx::runs_test(Series({1, 2, 3, 2, 1, 4, 4, 0}), tscx::RunsVariant::up_down);
    CHECK(res.n_effective == 6);
    CHECK(res.runs == 4);
    const double n = 7.0;  // differences + 1
    CHECK(res.z == Approx((4.0 - (2.0 * n - 1.0) / 3.0) / std::sqrt((16.0 * n - 29.0) / 90.0)));
  }
  SECTION("errors") {
    CHECK(tscx::parse_runs_variant("median") == tscx::RunsVariant::above_below_median);
    CHECK(tscx::parse_runs_variant("up_down") == tscx::RunsVariant::up_down);
    CHECK_THROWS_AS(tscx::parse_runs_variant("sideways"), tscx::Error);
    try {
      tscx::runs_test(Series(std::vector<double>(30, 4.0)));
      FAIL("expected degenerate series");
    } catch (const tscx::Error& e) {
      CHECK(std::string(e.what()).find("degenerate series") != std::string::npos);
    }
  }
}

TEST_CASE("welch t-test", "[randomness]") {
  const std::vector<double> a{1.0, 2.5, 3.0, 4.5, 2.0};
  SECTION("identical samples") {
    const auto res = tscx::welch_t_test(a, a);
    CHECK(res.t_statistic == 0.0);
    CHECK(res.p_value == 1.0);
  }
  SECTION("separated groups") {
    const auto res = tscx::welch_t_test(std::vector<double>{0, 0, 1, 1}, std::vector<double>{10, 10, 11, 11});
    CHECK(res.p_value < 0.001);
  }
  SECTION("p-value against an integrated t tail") {
    tscx::Xoshiro256 rng(61);
    std::vector<double> x(50), y(50);
    for (auto& v : x) v = rng.normal();
    for (auto& v : y) v = 0.1 + rng.normal();
    const auto res = tscx::welch_t_test(x, y);
    const double va = oracle::sample_variance(x) / 50.0;
    const double vb = oracle::sample_variance(y) / 50.0;
    const double t = (oracle::mean(x) - oracle::mean(y)) / std::sqrt(va + vb);
    const double df = (va + vb) * (va + vb) / (va * va / 49.0 + vb * vb / 49.0);
    CHECK(res.t_statistic == Approx(t).epsilon(1e-12));
    CHECK(res.df == Approx(df).epsilon(1e-12));
    CHECK(res.p_value == Approx(2.0 * oracle::student_upper_tail(std::abs(t), df)).margin(1e-6));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(tscx::welch_t_test(std::vector<double>{1}, a), tscx::Error);
    CHECK_THROWS_AS(tscx::welch_t_test(std::vector<double>{1, 1}, std::vector<double>{2, 2}), tscx::Error);
  }
}
