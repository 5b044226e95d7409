#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "binomial.hpp"
#include "special.hpp"

namespace medalstats {

struct LrtResult {
  double statistic = 0.0;  // deviance
  int df = 0;
  double p_value = 1.0;
  double pooled_p = 0.0;
  std::vector<double> per_sample_p;
  bool degenerate = false;  // pooled estimate on the boundary, statistic forced to 0
};

/// Upper tail of the chi-square distribution, Q(df/2, x/2).
inline double chisq_sf(double x, int df) {
  if (df < 1) throw std::invalid_argument("chisq_sf: df must be at least 1");
  if (x < 0.0) throw std::invalid_argument("chisq_sf: x must be nonnegative");
  return regularized_gamma_upper(0.5 * df, 0.5 * x);
}

/// Likelihood-ratio test that k binomial samples share one success
/// probability. Deviance against the pooled fit, chi-square with k-1 df.
inline LrtResult lrt_equal_proportions(const std::vector<BinomialSample>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("lrt_equal_proportions: need at least 2 samples");

  long long total_y = 0, total_n = 0;
  for (const auto& s : samples) {
    total_y += s.successes;
    total_n += s.trials;
  }

  LrtResult result;
  result.df = static_cast<int>(samples.size()) - 1;
  result.pooled_p = static_cast<double>(total_y) / total_n;
  result.per_sample_p.reserve(samples.size());
  for (const auto& s : samples) result.per_sample_p.push_back(point_estimate(s));

  if (total_y == 0 || total_y == total_n) {
    // Pooled estimate sits on the boundary; every sample is all-failures (or
    // all-successes), so both hypotheses fit the data identically.
    result.degenerate = true;
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }

  // Observed-vs-expected form of the deviance, with the 0*log(0/x) = 0
  // convention so empty cells contribute nothing.
  auto term = [](double observed, double expected) {
    return observed > 0.0 ? observed * std::log(observed / expected) : 0.0;
  };
  double pbar = result.pooled_p;
  double dev = 0.0;
  for (const auto& s : samples) {
    double n = s.trials;
    dev += term(s.successes, n * pbar);
    dev += term(n - s.successes, n * (1.0 - pbar));
  }
  result.statistic = std::max(0.0, 2.0 * dev);
  result.p_value = chisq_sf(result.statistic, result.df);
  return result;
}

}  // namespace medalstats
