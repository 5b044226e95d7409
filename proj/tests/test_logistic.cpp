#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "medalstats/embedded_data.hpp"
#include "medalstats/logistic.hpp"

namespace ms = medalstats;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ms::RegressionDataset make_data(std::vector<ms::RegressionRow> rows,
                                std::vector<std::string> names = {}) {
  ms::RegressionDataset data;
  data.covariate_names = std::move(names);
  data.rows = std::move(rows);
  return data;
}

// Analytic score vector sum_i (y_i - n_i p_i) x_i, for comparison against
// finite differences of the log-likelihood.
std::vector<double> score(const std::vector<double>& beta, const ms::RegressionDataset& data) {
  std::vector<double> g(beta.size(), 0.0);
  for (const auto& row : data.rows) {
    double resid =
        row.successes -
        row.trials * ms::detail::inverse_logit(ms::detail::linear_predictor(beta, row));
    g[0] += resid;
    for (size_t j = 0; j < row.covariates.size(); ++j) g[j + 1] += resid * row.covariates[j];
  }
  return g;
}

std::vector<double> fd_gradient(const std::vector<double>& beta,
                                const ms::RegressionDataset& data) {
  const double h = 1e-5;
  std::vector<double> g(beta.size());
  for (size_t j = 0; j < beta.size(); ++j) {
    auto up = beta, down = beta;
    up[j] += h;
    down[j] -= h;
    g[j] = (ms::loglik(up, data) - ms::loglik(down, data)) / (2.0 * h);
  }
  return g;
}

double saturated_loglik(const ms::RegressionDataset& data) {
  double ll = 0.0;
  for (const auto& row : data.rows) {
    double y = row.successes, n = row.trials;
    if (y > 0) ll += y * std::log(y / n);
    if (n - y > 0) ll += (n - y) * std::log(1.0 - y / n);
  }
  return ll;
}

}  // namespace

TEST_CASE("intercept-only fit has the closed-form solution") {
  auto data = make_data({{"2026", {}, 41, 348}});
  auto fit = ms::fit_logistic(data);
  REQUIRE(fit.coefficients.size() == 1);
  CHECK(fit.converged);
  CHECK_THAT(fit.coefficients[0], WithinAbs(std::log(41.0 / 307.0), 1e-8));
  CHECK_THAT(fit.coefficients[0], WithinAbs(-2.013276, 5e-7));
  // observed information is n p q, so the standard error is its root inverse
  REQUIRE(fit.std_errors.size() == 1);
  CHECK_THAT(fit.std_errors[0], WithinAbs(std::sqrt(348.0 / (41.0 * 307.0)), 1e-8));
  CHECK_THAT(ms::predict(fit, {}), WithinAbs(41.0 / 348.0, 1e-9));
  CHECK(ms::loglik(fit, data) == fit.loglik);
}

TEST_CASE("a saturated two-group fit reproduces both proportions") {
  auto data = make_data({{"ITA", {0.0}, 26, 348}, {"NOR", {1.0}, 41, 348}}, {"nor"});
  auto fit = ms::fit_logistic(data);
  REQUIRE(fit.coefficients.size() == 2);
  CHECK(fit.converged);
  CHECK_THAT(fit.coefficients[0], WithinAbs(std::log(26.0 / 322.0), 1e-8));
  // slope = log odds ratio between the groups
  CHECK_THAT(fit.coefficients[1],
             WithinAbs(std::log(41.0 / 307.0) - std::log(26.0 / 322.0), 1e-8));
  CHECK_THAT(fit.coefficients[1], WithinAbs(0.5032, 1e-4));
  CHECK_THAT(ms::predict(fit, {0.0}), WithinAbs(26.0 / 348.0, 1e-9));
  CHECK_THAT(ms::predict(fit, {1.0}), WithinAbs(41.0 / 348.0, 1e-9));
  CHECK_THAT(fit.loglik, WithinAbs(saturated_loglik(data), 1e-9));
}

TEST_CASE("an all-failures cell pushes the intercept to the boundary quietly") {
  // The MLE is at -infinity but the gradient dies before the walk gets far;
  // this must converge, not raise a separation error.
  auto fit = ms::fit_logistic(make_data({{"none", {}, 0, 10}}));
  CHECK(fit.converged);
  CHECK(fit.coefficients[0] < -20.0);
  CHECK(fit.std_errors[0] > 100.0);
  CHECK(ms::predict(fit, {}) < 1e-8);
}

TEST_CASE("rank-deficient designs are rejected") {
  auto constant_zero = make_data({{"a", {0.0}, 5, 10}, {"b", {0.0}, 7, 10}});
  CHECK_THROWS_AS(ms::fit_logistic(constant_zero), ms::RankDeficiencyError);

  auto collinear = make_data(
      {{"a", {1.0, 2.0}, 5, 10}, {"b", {2.0, 4.0}, 7, 10}, {"c", {3.0, 6.0}, 3, 10}});
  CHECK_THROWS_AS(ms::fit_logistic(collinear), ms::RankDeficiencyError);
}

TEST_CASE("complete separation raises its own error") {
  auto separated = make_data({{"lo", {0.0}, 0, 10}, {"hi", {1.0}, 10, 10}});
  CHECK_THROWS_AS(ms::fit_logistic(separated), ms::SeparationError);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ms::fit_logistic(make_data({{"one", {1.5}, 3, 10}})), std::invalid_argument);
  CHECK_THROWS_AS(ms::fit_logistic(make_data({{"bad", {}, 3, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(ms::fit_logistic(make_data({{"bad", {}, 11, 10}})), std::invalid_argument);
  CHECK_THROWS_AS(ms::fit_logistic(make_data({{"bad", {}, -1, 10}})), std::invalid_argument);
  CHECK_THROWS_AS(ms::fit_logistic(make_data({{"a", {1.0}, 3, 10}, {"b", {1.0, 2.0}, 3, 10}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ms::fit_logistic(make_data({{"a", {1.0}, 3, 10}, {"b", {2.0}, 3, 10}}, {"x", "y"})),
      std::invalid_argument);
  CHECK_THROWS_AS(ms::loglik({0.0}, make_data({{"a", {1.0}, 3, 10}})), std::invalid_argument);
}

TEST_CASE("prediction clamps nothing and checks dimensions") {
  auto fit = ms::fit_logistic(make_data({{"even", {}, 5, 10}}));
  CHECK_THAT(ms::predict(fit, {}), WithinAbs(0.5, 1e-9));

  ms::LogisticFit manual;
  manual.coefficients = {-50.0};
  double tiny = ms::predict(manual, {});
  CHECK(tiny > 0.0);
  CHECK(tiny < 1e-20);

  CHECK_THROWS_AS(ms::predict(fit, {1.0}), std::invalid_argument);
}

TEST_CASE("log-likelihood closed forms") {
  auto data = make_data({{"even", {}, 5, 10}});
  CHECK_THAT(ms::loglik({0.0}, data), WithinAbs(-10.0 * std::log(2.0), 1e-12));
  CHECK(ms::loglik({0.0}, make_data({})) == 0.0);
}

TEST_CASE("the example table parses with its covariate") {
  auto data = ms::parse_regression_table(ms::embedded::regress_example);
  REQUIRE(data.covariate_names == std::vector<std::string>{"decade"});
  REQUIRE(data.rows.size() == 25);
  CHECK(data.rows.front().label == "1924");
  CHECK(data.rows.front().successes == 17);
  CHECK(data.rows.front().trials == 48);
  CHECK_THAT(data.rows.front().covariates.at(0), WithinAbs(-5.2, 1e-12));
  CHECK(data.rows.back().label == "2026");
  CHECK(data.rows.back().successes == 41);
  CHECK(data.rows.back().trials == 348);
  CHECK_THAT(data.rows.back().covariates.at(0), WithinAbs(5.0, 1e-12));
}

TEST_CASE("regression table rejections") {
  CHECK_THROWS_AS(ms::parse_regression_table(""), ms::IntegrityError);
  CHECK_THROWS_AS(ms::parse_regression_table("# only a comment\n"), ms::IntegrityError);
  CHECK_THROWS_AS(ms::parse_regression_table("1924\t17\t48\n"), ms::ParseError);
  CHECK_THROWS_AS(ms::parse_regression_table("code\ttrials\tsuccesses\tx\n"), ms::ParseError);
  CHECK_THROWS_AS(ms::parse_regression_table("code\tsuccesses\ttrials\t\n"), ms::ParseError);
  const std::string header = "code\tsuccesses\ttrials\tx\n";
  CHECK_THROWS_AS(ms::parse_regression_table(header + "a\t1\t10\n"), ms::ParseError);
  CHECK_THROWS_AS(ms::parse_regression_table(header + "a\t1\t10\tnan?\n"), ms::ParseError);
  CHECK_THROWS_AS(ms::parse_regression_table(header + "a\t11\t10\t1.0\n"), ms::ParseError);
  CHECK_THROWS_AS(ms::parse_regression_table(header + "a\t1\t0\t1.0\n"), ms::ParseError);
  CHECK_THROWS_AS(ms::parse_regression_table(header + "\t1\t10\t1.0\n"), ms::ParseError);
}

TEST_CASE("the medal-share trend fit behaves") {
  auto data = ms::parse_regression_table(ms::embedded::regress_example);
  auto fit = ms::fit_logistic(data);
  REQUIRE(fit.coefficients.size() == 2);
  CHECK(fit.converged);
  CHECK(fit.iterations >= 1);
  CHECK(fit.coefficients[1] < 0.0);  // the share of events with a Norwegian medal declines
  for (double se : fit.std_errors) {
    CHECK(se > 0.0);
    CHECK(std::isfinite(se));
  }
  CHECK(ms::predict(fit, {-5.2}) > ms::predict(fit, {5.0}));
  double p2026 = ms::predict(fit, {5.0});
  CHECK(p2026 > 0.03);
  CHECK(p2026 < 0.25);
  CHECK(fit.loglik <= saturated_loglik(data));
  CHECK(ms::loglik(fit, data) == fit.loglik);

  // at the optimum the finite-difference gradient vanishes too
  for (double g : fd_gradient(fit.coefficients, data)) CHECK_THAT(g, WithinAbs(0.0, 1e-4));
}

TEST_CASE("analytic score matches finite differences away from the optimum") {
  auto data = ms::parse_regression_table(ms::embedded::regress_example);
  for (std::vector<double> beta : {std::vector<double>{0.0, 0.0},
                                   std::vector<double>{-1.5, 0.1},
                                   std::vector<double>{-2.0, -0.05}}) {
    auto analytic = score(beta, data);
    auto numeric = fd_gradient(beta, data);
    for (size_t j = 0; j < beta.size(); ++j) {
      INFO("beta0=" << beta[0] << " beta1=" << beta[1] << " component " << j);
      CHECK_THAT(numeric[j], WithinRel(analytic[j], 1e-4));
    }
  }
}

TEST_CASE("affine rescaling of a covariate moves only the coefficients") {
  auto data = ms::parse_regression_table(ms::embedded::regress_example);
  auto shifted = data;
  for (auto& row : shifted.rows) row.covariates[0] = 2.0 * row.covariates[0] + 3.0;

  auto fit = ms::fit_logistic(data);
  auto fit2 = ms::fit_logistic(shifted);
  CHECK(fit2.converged);
  CHECK_THAT(fit2.coefficients[1], WithinAbs(fit.coefficients[1] / 2.0, 1e-8));
  CHECK_THAT(fit2.coefficients[0],
             WithinAbs(fit.coefficients[0] - 1.5 * fit.coefficients[1], 1e-8));
  for (size_t i = 0; i < data.rows.size(); ++i) {
    CHECK_THAT(ms::predict(fit2, shifted.rows[i].covariates),
               WithinAbs(ms::predict(fit, data.rows[i].covariates), 1e-8));
  }
}
