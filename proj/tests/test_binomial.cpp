#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "medalstats/binomial.hpp"
#include "medalstats/embedded_data.hpp"
#include "oracles.hpp"

namespace ms = medalstats;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const std::vector<ms::GamesRecord>& games() {
  static const auto table = ms::parse_games_table(ms::embedded::games_norway);
  return table;
}

}  // namespace

TEST_CASE("binomial samples validate on construction") {
  CHECK(ms::BinomialSample(41, 348).successes == 41);
  CHECK_THROWS_AS(ms::BinomialSample(-1, 10), std::invalid_argument);
  CHECK_THROWS_AS(ms::BinomialSample(11, 10), std::invalid_argument);
  CHECK_THROWS_AS(ms::BinomialSample(0, 0), std::invalid_argument);
}

TEST_CASE("point estimates are exact ratios") {
  CHECK_THAT(ms::point_estimate({41, 348}), WithinAbs(0.1178, 5e-5));
  CHECK_THAT(ms::point_estimate({26, 183}), WithinAbs(0.1420, 1e-4));
  CHECK(ms::point_estimate({26, 183}) == 26.0 / 183.0);
  CHECK(ms::point_estimate({0, 10}) == 0.0);
  CHECK(ms::point_estimate({41, 348}) == 41.0 / 348.0);
}

TEST_CASE("binomial cdf handles the closed-form corners") {
  CHECK_THAT(ms::binomial_cdf(0, 1, 0.5), WithinAbs(0.5, 1e-15));
  for (double p : {0.0, 0.3, 1.0}) {
    CHECK(ms::binomial_cdf(7, 7, p) == 1.0);
    CHECK(ms::binomial_cdf(348, 348, p) == 1.0);
  }
  CHECK(ms::binomial_cdf(3, 9, 0.0) == 1.0);
  CHECK(ms::binomial_cdf(3, 9, 1.0) == 0.0);
  CHECK_THROWS_AS(ms::binomial_cdf(-1, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ms::binomial_cdf(6, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ms::binomial_cdf(2, 5, 1.5), std::invalid_argument);
}

TEST_CASE("binomial cdf matches the multiprecision oracle") {
  CHECK_THAT(ms::binomial_cdf(41, 348, 0.118),
             WithinAbs(oracle::binomial_cdf(41, 348, 0.118), 1e-12));

  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> pick_n(1, 500);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    int n = pick_n(rng);
    int y = std::uniform_int_distribution<int>(0, n)(rng);
    double p = pick_p(rng);
    INFO("y=" << y << " n=" << n << " p=" << p);
    CHECK_THAT(ms::binomial_cdf(y, n, p), WithinAbs(oracle::binomial_cdf(y, n, p), 1e-10));
  }
  // the contract extends to n = 5000
  CHECK_THAT(ms::binomial_cdf(500, 5000, 0.1),
             WithinAbs(oracle::binomial_cdf(500, 5000, 0.1), 1e-12));
}

TEST_CASE("half-corrected confidence distribution values") {
  // For y=0, n=1: C(p) = Pr(Y>0) + Pr(Y=0)/2 = p + (1-p)/2 = (1+p)/2.
  CHECK_THAT(ms::cd_half_corrected({0, 1}, 0.5), WithinAbs(0.75, 1e-15));
  CHECK(ms::cd_half_corrected({0, 1}, 0.0) == 0.5);
  CHECK_THAT(ms::cd_half_corrected({41, 348}, 41.0 / 348.0), WithinAbs(0.5, 0.03));
  CHECK_THAT(ms::cd_half_corrected({41, 348}, 1.0 - 1e-12), WithinAbs(1.0, 1e-9));
  CHECK(ms::cd_half_corrected({41, 348}, 1.0) == 1.0);
  CHECK_THROWS_AS(ms::cd_half_corrected({1, 2}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(ms::cd_half_corrected({1, 2}, 1.1), std::invalid_argument);
}

TEST_CASE("confidence distribution agrees with the multiprecision oracle") {
  std::mt19937 rng(4711);
  std::uniform_int_distribution<int> pick_n(1, 400);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    int n = pick_n(rng);
    int y = std::uniform_int_distribution<int>(0, n)(rng);
    double p = pick_p(rng);
    INFO("y=" << y << " n=" << n << " p=" << p);
    CHECK_THAT(ms::cd_half_corrected({y, n}, p),
               WithinAbs(oracle::cd_half_corrected(y, n, p), 1e-12));
  }
}

TEST_CASE("confidence distribution is nondecreasing in p") {
  const std::vector<ms::BinomialSample> samples{{41, 348}, {0, 10}, {10, 10}, {3, 7}};
  for (const auto& s : samples) {
    double prev = ms::cd_half_corrected(s, 0.0);
    for (int i = 1; i <= 1000; ++i) {
      double c = ms::cd_half_corrected(s, i / 1000.0);
      CHECK(c >= prev - 1e-12);
      prev = c;
    }
  }
}

TEST_CASE("cd median sits at the sample's center of symmetry") {
  CHECK(ms::cd_median({0, 1}) == 0.0);
  CHECK_THAT(ms::cd_median({1, 1}), WithinAbs(1.0, 1e-8));
  CHECK_THAT(ms::cd_median({5, 10}), WithinAbs(0.5, 1e-8));
  CHECK_THAT(ms::cd_median({41, 348}), WithinAbs(41.0 / 348.0, 2.0 / 348.0));
}

TEST_CASE("confidence curve bottoms out at the median") {
  auto curve = ms::confidence_curve({41, 348});
  REQUIRE(curve.grid.size() >= 2001);
  double best_p = 0.0, best_cc = 2.0;
  double prev_p = -1.0;
  for (const auto& [p, cc] : curve.grid) {
    CHECK(p > prev_p);  // strictly ascending grid
    prev_p = p;
    CHECK(cc >= 0.0);
    CHECK(cc <= 1.0);
    if (cc < best_cc) {
      best_cc = cc;
      best_p = p;
    }
  }
  CHECK(best_cc < 1e-3);
  CHECK_THAT(best_p, WithinAbs(41.0 / 348.0, 2.0 / 348.0));
  CHECK_THAT(best_p, WithinAbs(ms::cd_median({41, 348}), 1e-4));

  auto curve33 = ms::confidence_curve({33, 348});
  double min33_p = 0.0, min33 = 2.0;
  for (const auto& [p, cc] : curve33.grid)
    if (cc < min33) {
      min33 = cc;
      min33_p = p;
    }
  CHECK_THAT(min33_p, WithinAbs(0.095, 2.0 / 348.0));

  CHECK_THROWS_AS(ms::confidence_curve({1, 2}, 2), std::invalid_argument);
}

TEST_CASE("confidence curve is unimodal: nonincreasing then nondecreasing") {
  for (const ms::BinomialSample s : {ms::BinomialSample{41, 348}, {0, 10}, {7, 9}}) {
    auto curve = ms::confidence_curve(s, 501);
    size_t argmin = 0;
    for (size_t i = 1; i < curve.grid.size(); ++i)
      if (curve.grid[i].second < curve.grid[argmin].second) argmin = i;
    for (size_t i = 1; i <= argmin; ++i)
      CHECK(curve.grid[i].second <= curve.grid[i - 1].second + 1e-12);
    for (size_t i = argmin + 1; i < curve.grid.size(); ++i)
      CHECK(curve.grid[i].second >= curve.grid[i - 1].second - 1e-12);
  }
}

TEST_CASE("degenerate y=0 keeps a zero-valued curve point at p=0") {
  // With one failure in one trial, C(0) = 1/2 exactly, so cc(0) = 0: the
  // curve minimum sits at p = 0 and the level set is one-sided.
  auto curve = ms::confidence_curve({0, 1});
  CHECK(curve.grid.front().first == 0.0);
  CHECK_THAT(curve.grid.front().second, WithinAbs(0.0, 1e-12));
  // C(0.25) = (1+0.25)/2, so cc(0.25) = 0.25.
  bool found = false;
  for (const auto& [p, cc] : curve.grid)
    if (p == 0.25) {
      CHECK_THAT(cc, WithinAbs(0.25, 1e-12));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("curve intervals match the dense-scan oracle") {
  for (const ms::BinomialSample s :
       {ms::BinomialSample{41, 348}, {33, 348}, {26, 348}, {5, 50}, {1, 9}}) {
    for (double level : {0.5, 0.9, 0.99}) {
      auto ci = ms::curve_interval(s, level);
      auto want = oracle::curve_interval_scan(s.successes, s.trials, level);
      INFO("y=" << s.successes << " n=" << s.trials << " level=" << level);
      CHECK_THAT(ci.low, WithinAbs(want.low, 2e-5));
      CHECK_THAT(ci.high, WithinAbs(want.high, 2e-5));
      CHECK(ci.low <= ms::point_estimate(s));
      CHECK(ci.high >= ms::point_estimate(s));
    }
  }
}

TEST_CASE("the flagship 90 percent curve interval") {
  // The dense-scan oracle puts this interval at [0.09165, 0.14867]; the
  // oracle comparison above pins it tightly, this is the human-scale view.
  auto ci = ms::curve_interval({41, 348}, 0.90);
  CHECK_THAT(ci.low, WithinAbs(0.0917, 5e-4));
  CHECK_THAT(ci.high, WithinAbs(0.1487, 5e-4));
  CHECK(ci.level == 0.90);
}

TEST_CASE("curve interval endpoints sit on the level contour") {
  for (const ms::BinomialSample s : {ms::BinomialSample{41, 348}, {33, 348}, {5, 50}}) {
    auto ci = ms::curve_interval(s, 0.90);
    double cc_low = std::fabs(1.0 - 2.0 * ms::cd_half_corrected(s, ci.low));
    double cc_high = std::fabs(1.0 - 2.0 * ms::cd_half_corrected(s, ci.high));
    CHECK_THAT(cc_low, WithinAbs(0.90, 1e-5));
    CHECK_THAT(cc_high, WithinAbs(0.90, 1e-5));
  }
}

TEST_CASE("degenerate samples give one-sided curve intervals") {
  auto low_side = ms::curve_interval({0, 10}, 0.90);
  CHECK(low_side.low == 0.0);
  CHECK(low_side.high < 1.0);
  auto high_side = ms::curve_interval({10, 10}, 0.90);
  CHECK(high_side.high == 1.0);
  CHECK(high_side.low > 0.0);
  CHECK_THROWS_AS(ms::curve_interval({1, 2}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ms::curve_interval({1, 2}, 1.0), std::invalid_argument);
}

TEST_CASE("curve intervals nest across levels") {
  for (const ms::BinomialSample s : {ms::BinomialSample{41, 348}, {3, 7}, {0, 10}}) {
    auto narrow = ms::curve_interval(s, 0.5);
    auto mid = ms::curve_interval(s, 0.9);
    auto wide = ms::curve_interval(s, 0.99);
    CHECK(narrow.low >= mid.low);
    CHECK(mid.low >= wide.low);
    CHECK(narrow.high <= mid.high);
    CHECK(mid.high <= wide.high);
  }
}

TEST_CASE("wilson interval against the long-double oracle") {
  auto ci = ms::wilson_interval({41, 348}, 0.90);
  CHECK_THAT(ci.low, WithinAbs(0.0920, 5e-4));
  CHECK_THAT(ci.high, WithinAbs(0.1497, 5e-4));
  for (const ms::BinomialSample s :
       {ms::BinomialSample{41, 348}, {1, 9}, {8, 9}, {50, 100}, {348, 348}}) {
    for (double level : {0.5, 0.9, 0.99}) {
      auto got = ms::wilson_interval(s, level);
      auto want = oracle::wilson(s.successes, s.trials, level);
      INFO("y=" << s.successes << " n=" << s.trials << " level=" << level);
      CHECK_THAT(got.low, WithinAbs(want.low, 1e-12));
      CHECK_THAT(got.high, WithinAbs(want.high, 1e-12));
    }
  }
  CHECK_THROWS_AS(ms::wilson_interval({1, 2}, 1.0), std::invalid_argument);
}

TEST_CASE("wilson interval boundary and symmetry behavior") {
  for (int n : {1, 5, 348}) {
    CHECK(ms::wilson_interval({0, n}, 0.90).low == 0.0);
    CHECK(ms::wilson_interval({n, n}, 0.90).high == 1.0);
  }
  for (const ms::BinomialSample s : {ms::BinomialSample{41, 348}, {2, 9}, {0, 7}}) {
    auto a = ms::wilson_interval(s, 0.90);
    auto b = ms::wilson_interval({s.trials - s.successes, s.trials}, 0.90);
    CHECK_THAT(a.low, WithinAbs(1.0 - b.high, 1e-12));
    CHECK_THAT(a.high, WithinAbs(1.0 - b.low, 1e-12));
  }
}

TEST_CASE("wilson and curve intervals stay close on the whole series") {
  for (const auto& g : games()) {
    ms::BinomialSample s(g.norway.total(), 3 * g.events);
    auto w = ms::wilson_interval(s, 0.90);
    auto c = ms::curve_interval(s, 0.90);
    INFO("year " << g.year);
    CHECK_THAT(w.low, WithinAbs(c.low, 0.015));
    CHECK_THAT(w.high, WithinAbs(c.high, 0.015));
  }
}

TEST_CASE("series percentages reproduce the percent column") {
  auto series = ms::series_percentages(games(), 0.90);
  REQUIRE(series.size() == 25);
  for (size_t i = 0; i < series.size(); ++i) {
    CHECK(series[i].year == games()[i].year);
    CHECK(ms::round1(100.0 * series[i].estimate) == games()[i].percent);
    CHECK(series[i].interval.level == 0.90);
    CHECK(series[i].interval.low <= series[i].estimate);
    CHECK(series[i].interval.high >= series[i].estimate);
  }
  auto by_year = [&](int year) {
    for (const auto& pt : series)
      if (pt.year == year) return pt;
    throw std::runtime_error("year missing");
  };
  CHECK_THAT(100.0 * by_year(1988).estimate, WithinAbs(3.6, 0.05));
  CHECK_THAT(100.0 * by_year(1964).estimate, WithinAbs(14.7, 0.05));
  CHECK_THAT(100.0 * by_year(2026).estimate, WithinAbs(11.8, 0.05));

  auto cd_series = ms::series_percentages(games(), 0.90, ms::IntervalMethod::cd);
  for (size_t i = 0; i < series.size(); ++i) {
    CHECK_THAT(cd_series[i].interval.low, WithinAbs(series[i].interval.low, 0.015));
    CHECK_THAT(cd_series[i].interval.high, WithinAbs(series[i].interval.high, 0.015));
  }
}

TEST_CASE("pooled averages over the modern era") {
  double pooled = ms::pooled_average(games(), 1960, ms::AverageMode::pooled);
  CHECK_THAT(pooled, WithinAbs(353.0 / 3369.0, 1e-12));
  CHECK_THAT(100.0 * pooled, WithinAbs(10.5, 0.05));

  double mean = ms::pooled_average(games(), 1960, ms::AverageMode::mean_of_percents);
  CHECK_THAT(100.0 * mean, WithinAbs(10.3, 0.05));
  // Weighting by Games, not by events, shifts the average a little.
  CHECK(mean != pooled);

  for (auto mode : {ms::AverageMode::pooled, ms::AverageMode::mean_of_percents}) {
    CHECK_THAT(ms::pooled_average(games(), 2022, mode), WithinAbs(41.0 / 348.0, 1e-15));
  }

  auto totals = ms::historical_totals(games());
  CHECK_THAT(ms::pooled_average(games(), 1900, ms::AverageMode::pooled),
             WithinAbs(totals.medals / (3.0 * totals.events), 1e-15));

  CHECK_THROWS_AS(ms::pooled_average(games(), 2026, ms::AverageMode::pooled),
                  std::invalid_argument);
}

TEST_CASE("gold complement shares") {
  CHECK_THAT(ms::gold_complement_share(18, 116), WithinAbs(0.8448, 5e-5));
  CHECK(ms::gold_complement_share(18, 116) == 98.0 / 116.0);
  CHECK(ms::gold_complement_share(4, 16) == 0.75);
  CHECK(ms::gold_complement_share(0, 5) == 1.0);
  CHECK_THROWS_AS(ms::gold_complement_share(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(ms::gold_complement_share(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(ms::gold_complement_share(0, 0), std::invalid_argument);
}
