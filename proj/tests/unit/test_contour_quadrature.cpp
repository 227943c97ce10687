#include "psums/contour_quadrature.hpp"

#include <doctest.h>

using namespace psums;

TEST_CASE("adaptive Gauss-Kronrod on smooth and peaked integrands") {
  const QuadratureResult q = adaptive_gauss_kronrod([](double t) { return Complex(std::cos(t), 0.0); }, 0.0, 1.0, 1e-14);
  CHECK(q.converged);
  CHECK(std::abs(q.value - std::sin(1.0)) < 1e-15);

  // near-singular: 1/(t - i d) on [-1, 1] integrates to 2i atan(1/d)
  const double d = 1e-6;
  auto f = [d](double t) { return 1.0 / Complex(t, -d); };
  const QuadratureResult p = adaptive_gauss_kronrod(f, -1.0, 1.0, 1e-12, 0.0, 400000, {0.0});
  CHECK(p.converged);
  CHECK(std::abs(p.value - Complex(0.0, 2.0 * std::atan(1.0 / d))) < 1e-10);
  CHECK(p.error <= 1e-12 * p.l1);
}

TEST_CASE("composite Gauss-Legendre") {
  CHECK(std::abs(fixed_gauss_legendre([](double t) { return Complex(t * t * t * t, 0.0); }, 0.0, 2.0, 3) - 6.4) < 1e-13);
}

TEST_CASE("Cauchy integral over a closed circle") {
  ContourSegment circle;
  circle.t_begin = 0.0;
  circle.t_end = 2.0 * kPi;
  circle.point = [](double t) { return std::polar(1.0, t); };
  circle.tangent = [](double t) { return kI * std::polar(1.0, t); };
  const std::vector<ContourSegment> c{circle};
  // density s^2: the transform is z^2 inside and 0 outside
  auto rho = [](Complex s) { return s * s; };
  const Complex z(0.3, -0.2);
  CHECK(std::abs(cauchy_integral(c, rho, z, 1e-12).value - z * z) < 2e-12);
  CHECK(std::abs(cauchy_integral(c, rho, 2.0, 1e-12).value) < 1e-13);
  // log form: e^{650 + s} is near the top of the double range, so the
  // per-segment rescale has to keep the integrand finite
  auto log_rho = [](Complex s) { return 650.0 + s; };
  const CauchyIntegralResult r = cauchy_integral_log(c, log_rho, 0.5, 1e-12);
  CHECK(std::abs(std::log(r.value) - Complex(650.5, 0.0)) < 1e-11);
  CHECK_THROWS_AS(cauchy_integral(c, rho, 1.0, 1e-12), DomainError);
  CHECK_THROWS_AS(cauchy_integral_log(c, [](Complex s) { return 800.0 + s; }, 0.5, 1e-12), RangeExceeded);
  CHECK(std::abs(cauchy_integral_fixed(c, [](Complex s) { return std::log(s * s); }, z, 40) - z * z) < 1e-12);
}

TEST_CASE("nearest parameter and split") {
  ContourSegment line;
  line.t_begin = -1.0;
  line.t_end = 1.0;
  line.point = [](double t) { return Complex(t, 0.0); };
  line.tangent = [](double) { return Complex(1.0, 0.0); };
  const auto [t, d] = nearest_parameter(line, {0.3, 0.01});
  // golden section on a quadratic minimum resolves t to about sqrt(eps)
  CHECK(std::abs(t - 0.3) < 1e-7);
  CHECK(std::abs(d - 0.01) < 1e-12);
  const auto [a, b] = split_segment(line, 0.3);
  CHECK(a.t_end == 0.3);
  CHECK(b.t_begin == 0.3);
}
