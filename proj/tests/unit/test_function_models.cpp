#include "fixtures.hpp"
#include "psums/function_models.hpp"
#include "psums/special_functions.hpp"

#include <doctest.h>

using namespace psums;
using psums::testing::oracle;
using psums::testing::rel_err;

TEST_CASE("exp model coefficients and evaluation") {
  const auto m = EntireFunctionModel::exp();
  CHECK(m.coefficient(0) == Complex(1.0, 0.0));
  CHECK(rel_err(m.coefficient(10), 1.0 / 3628800.0) < 1e-14);
  CHECK(rel_err(m.evaluate({2.0, -1.0}), std::exp(Complex(2.0, -1.0))) < 1e-14);
  CHECK(std::abs(m.log_evaluate(800.0).log_abs - 800.0) < 1e-12);
  CHECK(m.real_coefficients());
  CHECK(m.max_degree() == -1);
}

TEST_CASE("Mittag-Leffler with lambda = 1 is the exponential") {
  const auto ml = EntireFunctionModel::mittag_leffler(1.0);
  const auto ex = EntireFunctionModel::exp();
  for (long k : {0L, 3L, 17L, 60L}) CHECK(rel_err(ml.coefficient(k), ex.coefficient(k)) < 1e-13);
  CHECK(rel_err(ml.evaluate({3.0, 2.0}), ex.evaluate({3.0, 2.0})) < 1e-13);
}

TEST_CASE("Mittag-Leffler lambda = 2 deviation from the growth form") {
  const auto ml = EntireFunctionModel::mittag_leffler(2.0);
  CHECK(ml.deviation_prefactor() == 2.0);
  const DeviationSample d = deviation(ml, 6.0);
  const double want = oracle()["ml_lambda2_deviation_z6"].get<double>();
  CHECK(std::abs(d.delta.real() - want) < 1e-10 * std::abs(want));
  CHECK_THROWS_AS(deviation(ml, Complex(0.0, 5.0)), DomainError);  // outside the sector
}

TEST_CASE("section 5 example coefficients") {
  const auto m = EntireFunctionModel::section5_example();
  CHECK(m.violates_growth_model());
  // (e^z - e^{-z}(1 + 2z))/z^2 = 2 - 2z/3 + z^2/3 ...
  CHECK(std::abs(m.coefficient(0) - 2.0) < 1e-15);
  CHECK(std::abs(m.coefficient(1) + 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(m.coefficient(2) - 1.0 / 3.0) < 1e-15);
  const Complex z(0.9, 0.4);
  CHECK(rel_err(m.evaluate(z), (std::exp(z) - std::exp(-z) * (1.0 + 2.0 * z)) / (z * z)) < 1e-12);
}

TEST_CASE("builtin model names") {
  CHECK(builtin_model("exp").kind() == ModelKind::Exp);
  CHECK(builtin_model("section5").kind() == ModelKind::Section5);
  CHECK(builtin_model("mittag_leffler(2)").lambda() == 2.0);
  CHECK(builtin_model("ml", 3.0).lambda() == 3.0);
  CHECK_THROWS_AS(builtin_model("ml"), DomainError);
  CHECK_THROWS_AS(builtin_model("nope"), DomainError);
}

TEST_CASE("growth profile validation") {
  GrowthProfile p;
  CHECK_NOTHROW(validate_profile(p));
  p.theta = 4.0;
  CHECK_THROWS_AS(validate_profile(p), DomainError);
  p = {};
  p.mu = 1.5;
  CHECK_THROWS_AS(validate_profile(p), DomainError);
  CHECK_THROWS_AS(EntireFunctionModel::mittag_leffler(-1.0), DomainError);
}

TEST_CASE("custom coefficient table") {
  GrowthProfile p;
  const auto m = EntireFunctionModel::custom("quadratic", p, {1.0, 1.0, 0.5});
  CHECK(m.max_degree() == 2);
  CHECK(rel_err(m.evaluate(1.0), 2.5) < 1e-15);
}

TEST_CASE("deviation tilde folds the logarithmic factor") {
  const auto ex = EntireFunctionModel::exp();
  CHECK(std::abs(deviation_tilde(ex, 50.0, {0.9, 0.1})) == 0.0);
  CHECK_THROWS_AS(deviation_tilde(ex, 0.5, 1.0), DomainError);
}

TEST_CASE("logarithmic derivative growth stays bounded") {
  const auto ml = EntireFunctionModel::mittag_leffler(2.0);
  const DerivativeGrowthReport r = check_derivative_growth(ml, {16, 32, 64}, {0.8, 1.0, 1.2}, 0.1);
  CHECK(r.bounded);
  REQUIRE(r.rows.size() == 3);
  // f'/f ~ lambda z^{lambda-1} on the ray
  CHECK(std::abs(ml.log_derivative(6.0) - 12.0) < 1e-6);
}
