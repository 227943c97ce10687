#include "fixtures.hpp"
#include "psums/special_functions.hpp"

#include <doctest.h>

using namespace psums;
using psums::testing::as_complex;
using psums::testing::oracle;
using psums::testing::rel_err;

TEST_CASE("erfc matches the high-precision value and the ray integral") {
  const Complex got = erfc({1.5, 0.5});
  CHECK(rel_err(got, as_complex(oracle()["erfc_1.5+0.5i"])) < 1e-12);
  CHECK(rel_err(got, as_complex(oracle()["erfc_1.5+0.5i_quadrature"])) < 1e-12);
}

TEST_CASE("erfc reflection and conjugation hold across the plane") {
  for (double x : {-4.0, -1.2, -0.3, 0.0, 0.4, 2.2, 6.0})
    for (double y : {-3.0, -0.5, 0.0, 0.7, 2.5}) {
      const Complex z(x, y);
      CHECK(std::abs(erfc(z) + erfc(-z) - 2.0) < 1e-12 * std::max(1.0, std::abs(erfc(-z))));
      CHECK(std::abs(erfc(std::conj(z)) - std::conj(erfc(z))) <= 1e-14 * std::abs(erfc(z)));
    }
}

TEST_CASE("erfc on the real axis agrees with the C library") {
  for (double x : {-3.0, -0.5, 0.1, 1.0, 3.5, 8.0})
    CHECK(std::abs(erfc(Complex(x, 0.0)).real() - std::erfc(x)) <= 1e-14 * std::erfc(x) + 1e-300);
}

TEST_CASE("erfcx stays bounded where erfc underflows") {
  const Complex z(30.0, 5.0);
  // e^{z^2} erfc(z) ~ 1/(sqrt(pi) z)
  CHECK(rel_err(erfcx(z), 1.0 / (std::sqrt(kPi) * z)) < 1e-3);
  CHECK(std::isfinite(std::abs(erfcx(Complex(-3.0, 0.2)))));
}

TEST_CASE("first erfc zero pair is certified") {
  const ErfcZeroList zs = erfc_zeros(2);
  REQUIRE(zs.zeros.size() == 4);
  CHECK(rel_err(zs.zeros[0], as_complex(oracle()["erfc_first_zero"])) < 1e-12);
  CHECK(zs.zeros[1] == std::conj(zs.zeros[0]));
  for (int w : zs.winding_numbers) CHECK(w == 1);
  for (double r : zs.residuals) CHECK(r < 1e-12);
  // ordered by modulus
  CHECK(std::abs(zs.zeros[2]) > std::abs(zs.zeros[0]));
}

TEST_CASE("argument principle counts erfc zeros in a disk") {
  const Complex z1 = erfc_zeros(1).zeros[0];
  CHECK(argument_principle_count([](Complex z) { return erfc(z); }, z1, 0.3) == 1);
  CHECK(argument_principle_count([](Complex z) { return erfc(z); }, {0.0, 0.0}, 1.0) == 0);
}

TEST_CASE("gaussian Cauchy transform h") {
  CHECK(rel_err(gaussian_cauchy_h({2.0, 3.0}), as_complex(oracle()["h_2+3i"])) < 1e-10);
  // jump e^{-x^2} across the real axis
  for (double x : {-1.0, 0.0, 0.8}) {
    const Complex jump = gaussian_cauchy_h({x, 1e-10}) - gaussian_cauchy_h({x, -1e-10});
    CHECK(std::abs(jump - std::exp(-x * x)) < 1e-8);
  }
  CHECK_THROWS_AS(gaussian_cauchy_h({0.5, 0.0}), DomainError);
  // far from the axis h(zeta) ~ -sqrt(pi) / (2 pi i zeta)
  const Complex far(3.0, 50.0);
  CHECK(rel_err(gaussian_cauchy_h(far), -std::sqrt(kPi) / (2.0 * kPi * kI * far)) < 1e-3);
}

TEST_CASE("Mittag-Leffler function") {
  CHECK(std::abs(mittag_leffler(4.0, 2.0).real() / oracle()["ml_lambda2_z4"].get<double>() - 1.0) < 1e-13);
  for (Complex z : {Complex(1.0, 1.0), Complex(-5.0, 0.0), Complex(20.0, 3.0)})
    CHECK(rel_err(mittag_leffler(z, 1.0), std::exp(z)) < 1e-13);
  // E_{1/2}(z) = e^{z^2} erfc(-z)
  const Complex z(0.7, -0.4);
  CHECK(rel_err(mittag_leffler(z, 2.0), std::exp(z * z) * erfc(-z)) < 1e-12);
  // the log form survives arguments where the value overflows
  const LogComplex big = mittag_leffler_log(40.0, 2.0);
  CHECK(std::abs(big.log_abs - (1600.0 + std::log(2.0))) < 1e-9);
}

TEST_CASE("log gamma") {
  CHECK(rel_err(log_gamma({0.5, 2.0}), as_complex(oracle()["log_gamma_0.5+2i"])) < 1e-13);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-14);
  CHECK_THROWS_AS(log_gamma(-2.0), DomainError);
}

TEST_CASE("log1p for small arguments") {
  const Complex t(1e-12, -3e-13);
  CHECK(rel_err(log1p_complex(t), t - t * t / 2.0) < 1e-15);
}
