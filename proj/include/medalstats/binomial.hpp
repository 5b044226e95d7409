#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dataset.hpp"
#include "special.hpp"

namespace medalstats {

struct BinomialSample {
  BinomialSample(int successes_, int trials_) : successes(successes_), trials(trials_) {
    if (trials < 1) throw std::invalid_argument("BinomialSample: trials must be at least 1");
    if (successes < 0 || successes > trials)
      throw std::invalid_argument("BinomialSample: successes must lie in [0, trials]");
  }
  int successes;
  int trials;
};

struct ConfidenceInterval {
  double level = 0.0;
  double low = 0.0;
  double high = 1.0;
};

struct ConfidenceCurve {
  BinomialSample sample;
  std::vector<std::pair<double, double>> grid;  // (p, cc), p ascending
};

inline double point_estimate(const BinomialSample& s) {
  return static_cast<double>(s.successes) / s.trials;
}

namespace detail {

inline double binomial_pmf(int y, int n, double p) {
  if (p <= 0.0) return y == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return y == n ? 1.0 : 0.0;
  long double lp = std::log(static_cast<long double>(p));
  long double lq = std::log1p(static_cast<long double>(-p));
  return static_cast<double>(std::exp(log_choose(n, y) + y * lp + (n - y) * lq));
}

/// Pr(Y > y) by direct summation of the upper-tail terms; no 1-x cancellation.
inline double binomial_upper_tail(int y, int n, double p) {
  if (y >= n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  long double lp = std::log(static_cast<long double>(p));
  long double lq = std::log1p(static_cast<long double>(-p));
  long double sum = 0.0L;
  for (int k = y + 1; k <= n; ++k)
    sum += std::exp(log_choose(n, k) + k * lp + (n - k) * lq);
  return static_cast<double>(std::min(sum, 1.0L));
}

}  // namespace detail

/// Pr(Y <= y) accumulated from log factorials, summing whichever tail has
/// fewer terms. Absolute error stays under 1e-12 for n up to 5000.
inline double binomial_cdf(int y, int n, double p) {
  if (n < 1) throw std::invalid_argument("binomial_cdf: n must be at least 1");
  if (y < 0 || y > n) throw std::invalid_argument("binomial_cdf: y must lie in [0, n]");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial_cdf: p must lie in [0, 1]");
  if (y == n) return 1.0;
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  long double lp = std::log(static_cast<long double>(p));
  long double lq = std::log1p(static_cast<long double>(-p));
  if (y + 1 <= n - y) {
    long double sum = 0.0L;
    for (int k = 0; k <= y; ++k)
      sum += std::exp(detail::log_choose(n, k) + k * lp + (n - k) * lq);
    return static_cast<double>(std::min(sum, 1.0L));
  }
  long double sum = 0.0L;
  for (int k = y + 1; k <= n; ++k)
    sum += std::exp(detail::log_choose(n, k) + k * lp + (n - k) * lq);
  return static_cast<double>(std::max(1.0L - sum, 0.0L));
}

/// Half-corrected confidence distribution C(p) = Pr_p(Y > y) + 0.5 Pr_p(Y = y),
/// nondecreasing in p.
inline double cd_half_corrected(const BinomialSample& s, double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("cd_half_corrected: p must lie in [0, 1]");
  double value = detail::binomial_upper_tail(s.successes, s.trials, p) +
                 0.5 * detail::binomial_pmf(s.successes, s.trials, p);
  return std::clamp(value, 0.0, 1.0);
}

namespace detail {

/// Smallest p with C(p) >= target, located by bisection; C is nondecreasing.
inline double invert_cd(const BinomialSample& s, double target, double tol = 1e-9) {
  double lo = 0.0, hi = 1.0;
  if (cd_half_corrected(s, 0.0) >= target) return 0.0;
  if (cd_half_corrected(s, 1.0) < target) return 1.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (cd_half_corrected(s, mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// The p with C(p) = 1/2; the confidence curve bottoms out here.
inline double cd_median(const BinomialSample& s) { return detail::invert_cd(s, 0.5); }

/// cc(p) = |1 - 2 C(p)| on a uniform grid over [0,1], with extra points
/// clustered around the median so the curve's minimum is resolved to 1e-4.
inline ConfidenceCurve confidence_curve(const BinomialSample& s, int grid_size = 2001) {
  if (grid_size < 3) throw std::invalid_argument("confidence_curve: grid_size must be at least 3");
  std::vector<double> ps;
  ps.reserve(grid_size + 21);
  for (int i = 0; i < grid_size; ++i)
    ps.push_back(static_cast<double>(i) / (grid_size - 1));
  double median = cd_median(s);
  for (int j = -10; j <= 10; ++j) {
    double p = median + j * 1e-5;
    if (p > 0.0 && p < 1.0) ps.push_back(p);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  ConfidenceCurve curve{s, {}};
  curve.grid.reserve(ps.size());
  for (double p : ps)
    curve.grid.emplace_back(p, std::fabs(1.0 - 2.0 * cd_half_corrected(s, p)));
  return curve;
}

/// Level set {p : cc(p) <= level}, i.e. C(p) in [(1-level)/2, (1+level)/2],
/// with each endpoint found by bisection on the monotone C.
inline ConfidenceInterval curve_interval(const BinomialSample& s, double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("curve_interval: level must lie strictly inside (0, 1)");
  double alpha_low = 0.5 * (1.0 - level);
  double alpha_high = 0.5 * (1.0 + level);
  ConfidenceInterval ci;
  ci.level = level;
  // y=0 has C(0) = 0.5 >= alpha_low, so the interval is one-sided from 0;
  // symmetrically y=n pins the upper end at 1.
  ci.low = detail::invert_cd(s, alpha_low);
  ci.high = detail::invert_cd(s, alpha_high);
  return ci;
}

/// Wilson score interval at the two-sided level, endpoints clamped to [0,1].
inline ConfidenceInterval wilson_interval(const BinomialSample& s, double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("wilson_interval: level must lie strictly inside (0, 1)");
  double z = normal_quantile(0.5 + 0.5 * level);
  double n = s.trials;
  double phat = point_estimate(s);
  double z2n = z * z / n;
  double denom = 1.0 + z2n;
  double center = (phat + 0.5 * z2n) / denom;
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  ConfidenceInterval ci;
  ci.level = level;
  ci.low = s.successes == 0 ? 0.0 : std::max(0.0, center - half);
  ci.high = s.successes == s.trials ? 1.0 : std::min(1.0, center + half);
  return ci;
}

enum class IntervalMethod { wilson, cd };

struct SeriesPoint {
  int year = 0;
  double estimate = 0.0;  // fraction, not percent
  ConfidenceInterval interval;
};

inline std::vector<SeriesPoint> series_percentages(const std::vector<GamesRecord>& games,
                                                   double level,
                                                   IntervalMethod method = IntervalMethod::wilson) {
  std::vector<SeriesPoint> points;
  points.reserve(games.size());
  for (const auto& g : games) {
    BinomialSample s(g.norway.total(), 3 * g.events);
    SeriesPoint pt;
    pt.year = g.year;
    pt.estimate = point_estimate(s);
    pt.interval = method == IntervalMethod::wilson ? wilson_interval(s, level)
                                                   : curve_interval(s, level);
    points.push_back(pt);
  }
  return points;
}

enum class AverageMode { pooled, mean_of_percents };

/// Average medal share over the Games after from_year: either one pooled
/// binomial fraction or the unweighted mean of the per-Games fractions.
inline double pooled_average(const std::vector<GamesRecord>& games, int from_year,
                             AverageMode mode) {
  long long medals = 0, chances = 0;
  double percent_sum = 0.0;
  int count = 0;
  for (const auto& g : games) {
    if (g.year <= from_year) continue;
    medals += g.norway.total();
    chances += 3LL * g.events;
    percent_sum += static_cast<double>(g.norway.total()) / (3.0 * g.events);
    ++count;
  }
  if (count == 0)
    throw std::invalid_argument("pooled_average: no Games after " + std::to_string(from_year));
  if (mode == AverageMode::pooled) return static_cast<double>(medals) / chances;
  return percent_sum / count;
}

/// Share of events whose gold went to somebody else.
inline double gold_complement_share(int golds, int events) {
  if (events < 1) throw std::invalid_argument("gold_complement_share: events must be at least 1");
  if (golds < 0 || golds > events)
    throw std::invalid_argument("gold_complement_share: golds must lie in [0, events]");
  return static_cast<double>(events - golds) / events;
}

}  // namespace medalstats
