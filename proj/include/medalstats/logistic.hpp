#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsv.hpp"

namespace medalstats {

class RankDeficiencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeparationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RegressionRow {
  std::string label;
  std::vector<double> covariates;
  int successes = 0;
  int trials = 0;
};

struct RegressionDataset {
  std::vector<std::string> covariate_names;  // may be empty for programmatic data
  std::vector<RegressionRow> rows;
  size_t covariate_count() const {
    return rows.empty() ? covariate_names.size() : rows.front().covariates.size();
  }
};

struct LogisticFit {
  std::vector<double> coefficients;  // intercept first
  double loglik = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> std_errors;
};

namespace detail {

inline void check_regression_data(const RegressionDataset& data) {
  size_t p = data.covariate_count();
  if (!data.covariate_names.empty() && data.covariate_names.size() != p)
    throw std::invalid_argument("regression data: covariate names do not match dimension");
  for (const auto& row : data.rows) {
    if (row.covariates.size() != p)
      throw std::invalid_argument("regression data: rows disagree on covariate dimension");
    if (row.trials < 1) throw std::invalid_argument("regression data: trials must be at least 1");
    if (row.successes < 0 || row.successes > row.trials)
      throw std::invalid_argument("regression data: successes must lie in [0, trials]");
  }
}

/// log(1 + exp(eta)) without overflow.
inline double log1pexp(double eta) {
  if (eta > 0.0) return eta + std::log1p(std::exp(-eta));
  return std::log1p(std::exp(eta));
}

inline double inverse_logit(double eta) {
  if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
  double e = std::exp(eta);
  return e / (1.0 + e);
}

/// Cholesky factorization of a symmetric matrix stored row-major; the pivot
/// check is what detects rank-deficient designs.
inline std::vector<double> cholesky(const std::vector<double>& a, size_t dim) {
  std::vector<double> l(dim * dim, 0.0);
  double scale = 0.0;
  for (size_t i = 0; i < dim; ++i) scale = std::max(scale, std::fabs(a[i * dim + i]));
  if (scale == 0.0) throw RankDeficiencyError("design matrix is rank deficient");
  for (size_t j = 0; j < dim; ++j) {
    double pivot = a[j * dim + j];
    for (size_t k = 0; k < j; ++k) pivot -= l[j * dim + k] * l[j * dim + k];
    if (pivot <= scale * 1e-12) throw RankDeficiencyError("design matrix is rank deficient");
    l[j * dim + j] = std::sqrt(pivot);
    for (size_t i = j + 1; i < dim; ++i) {
      double sum = a[i * dim + j];
      for (size_t k = 0; k < j; ++k) sum -= l[i * dim + k] * l[j * dim + k];
      l[i * dim + j] = sum / l[j * dim + j];
    }
  }
  return l;
}

inline std::vector<double> cholesky_solve(const std::vector<double>& l, size_t dim,
                                          const std::vector<double>& b) {
  std::vector<double> x(b);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t k = 0; k < i; ++k) x[i] -= l[i * dim + k] * x[k];
    x[i] /= l[i * dim + i];
  }
  for (size_t ii = dim; ii-- > 0;) {
    for (size_t k = ii + 1; k < dim; ++k) x[ii] -= l[k * dim + ii] * x[k];
    x[ii] /= l[ii * dim + ii];
  }
  return x;
}

inline double linear_predictor(const std::vector<double>& beta, const RegressionRow& row) {
  double eta = beta[0];
  for (size_t j = 0; j < row.covariates.size(); ++j) eta += beta[j + 1] * row.covariates[j];
  return eta;
}

}  // namespace detail

/// Grouped-binomial log-likelihood sum of y log p + (n-y) log(1-p); the
/// binomial coefficients are constant in beta and omitted throughout.
inline double loglik(const std::vector<double>& coefficients, const RegressionDataset& data) {
  detail::check_regression_data(data);
  if (!data.rows.empty() && coefficients.size() != data.covariate_count() + 1)
    throw std::invalid_argument("loglik: coefficient dimension does not match data");
  double ll = 0.0;
  for (const auto& row : data.rows) {
    double eta = detail::linear_predictor(coefficients, row);
    ll += row.successes * eta - row.trials * detail::log1pexp(eta);
  }
  return ll;
}

inline double loglik(const LogisticFit& fit, const RegressionDataset& data) {
  return loglik(fit.coefficients, data);
}

/// Maximum-likelihood fit by Newton iterations with step-halving, starting
/// from beta = 0. Converged means the gradient max-norm fell below 1e-8;
/// standard errors come from the inverse observed information.
inline LogisticFit fit_logistic(const RegressionDataset& data) {
  detail::check_regression_data(data);
  size_t p = data.covariate_count();
  size_t dim = p + 1;
  if (data.rows.size() < dim)
    throw std::invalid_argument("fit_logistic: need at least " + std::to_string(dim) + " rows");

  const int max_iterations = 100;
  const double gradient_tol = 1e-8;
  const double separation_threshold = 30.0;

  std::vector<double> beta(dim, 0.0);
  double ll = loglik(beta, data);

  LogisticFit fit;
  std::vector<double> gradient(dim), hessian(dim * dim);

  auto fill_derivatives = [&](const std::vector<double>& b) {
    std::fill(gradient.begin(), gradient.end(), 0.0);
    std::fill(hessian.begin(), hessian.end(), 0.0);
    for (const auto& row : data.rows) {
      double mu = row.trials * detail::inverse_logit(detail::linear_predictor(b, row));
      double w = mu * (1.0 - mu / row.trials);
      double resid = row.successes - mu;
      for (size_t i = 0; i < dim; ++i) {
        double xi = i == 0 ? 1.0 : row.covariates[i - 1];
        gradient[i] += resid * xi;
        for (size_t j = 0; j <= i; ++j) {
          double xj = j == 0 ? 1.0 : row.covariates[j - 1];
          hessian[i * dim + j] += w * xi * xj;
        }
      }
    }
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = i + 1; j < dim; ++j) hessian[i * dim + j] = hessian[j * dim + i];
  };
  auto max_abs = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  };

  std::vector<double> chol;
  for (int iter = 0; iter < max_iterations; ++iter) {
    fill_derivatives(beta);
    if (max_abs(gradient) < gradient_tol) {
      fit.converged = true;
      break;
    }
    chol = detail::cholesky(hessian, dim);
    std::vector<double> delta = detail::cholesky_solve(chol, dim, gradient);

    // Halve the step until the objective stops getting worse.
    double step = 1.0;
    std::vector<double> candidate(dim);
    double candidate_ll = ll;
    for (int halving = 0; halving < 60; ++halving) {
      for (size_t i = 0; i < dim; ++i) candidate[i] = beta[i] + step * delta[i];
      candidate_ll = loglik(candidate, data);
      if (candidate_ll >= ll - 1e-12) break;
      step *= 0.5;
    }
    if (candidate_ll < ll - 1e-12) break;  // no acceptable step; report unconverged
    beta = candidate;
    ll = candidate_ll;
    fit.iterations = iter + 1;

    if (max_abs(beta) > separation_threshold) {
      fill_derivatives(beta);
      if (max_abs(gradient) >= gradient_tol)
        throw SeparationError(
            "complete separation: coefficients diverge with a nonvanishing gradient");
    }
  }

  if (!fit.converged) {
    fill_derivatives(beta);
    fit.converged = max_abs(gradient) < gradient_tol;
  }

  fit.coefficients = beta;
  fit.loglik = ll;
  fill_derivatives(beta);
  chol = detail::cholesky(hessian, dim);
  fit.std_errors.resize(dim);
  std::vector<double> unit(dim, 0.0);
  for (size_t j = 0; j < dim; ++j) {
    std::fill(unit.begin(), unit.end(), 0.0);
    unit[j] = 1.0;
    std::vector<double> column = detail::cholesky_solve(chol, dim, unit);
    fit.std_errors[j] = std::sqrt(column[j]);
  }
  return fit;
}

inline double predict(const LogisticFit& fit, const std::vector<double>& covariates) {
  if (covariates.size() + 1 != fit.coefficients.size())
    throw std::invalid_argument("predict: covariate dimension does not match fit");
  RegressionRow row;
  row.covariates = covariates;
  return detail::inverse_logit(detail::linear_predictor(fit.coefficients, row));
}

/// TSV of code, successes, trials, then named covariate columns; the header
/// row supplies the covariate names.
inline RegressionDataset parse_regression_table(std::string_view text) {
  RegressionDataset data;
  bool have_header = false;
  tsv::for_each_row(text, [&](int line, const std::vector<std::string_view>& f) {
    if (!have_header) {
      if (f.size() < 3 || tsv::trim(f[0]) != "code" || tsv::trim(f[1]) != "successes" ||
          tsv::trim(f[2]) != "trials")
        throw ParseError("expected header 'code successes trials <covariates...>'", line);
      for (size_t i = 3; i < f.size(); ++i) {
        std::string name(tsv::trim(f[i]));
        if (name.empty()) throw ParseError("empty covariate name in header", line);
        data.covariate_names.push_back(std::move(name));
      }
      have_header = true;
      return;
    }
    if (f.size() != data.covariate_names.size() + 3)
      throw ParseError("expected " + std::to_string(data.covariate_names.size() + 3) +
                           " fields, got " + std::to_string(f.size()),
                       line);
    RegressionRow row;
    row.label = std::string(tsv::trim(f[0]));
    if (row.label.empty()) throw ParseError("empty code field", line);
    row.successes = tsv::parse_int(f[1], line, "successes");
    row.trials = tsv::parse_int(f[2], line, "trials");
    if (row.trials < 1) throw ParseError("trials must be at least 1", line);
    if (row.successes < 0 || row.successes > row.trials)
      throw ParseError("successes must lie in [0, trials]", line);
    for (size_t i = 3; i < f.size(); ++i)
      row.covariates.push_back(tsv::parse_double(f[i], line, data.covariate_names[i - 3]));
    data.rows.push_back(std::move(row));
  });
  if (!have_header) throw IntegrityError("regression table lacks a header row");
  return data;
}

}  // namespace medalstats
