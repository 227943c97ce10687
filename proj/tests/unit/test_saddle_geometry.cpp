#include "psums/saddle_geometry.hpp"

#include <doctest.h>

#include <algorithm>

using namespace psums;

TEST_CASE("saddle function near z = 1") {
  for (double lambda : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(phi(1.0, lambda)) == 0.0);
    const Complex h(1e-5, 2e-5);
    // phi(1 + h) = lambda h^2/2 + O(h^3)
    CHECK(std::abs(phi(1.0 + h, lambda) / (lambda * h * h / 2.0) - 1.0) < 1e-4);
    CHECK(std::abs(phi_derivative(1.0, lambda)) == 0.0);
  }
  CHECK(std::abs(scaling_radius(50, 2.0) - 5.0) < 1e-14);
}

TEST_CASE("chart round trip and branch") {
  for (double lambda : {1.0, 2.0, 0.5}) {
    const SaddleChart chart = build_chart(lambda);
    CHECK(chart.radius_V() > 0.0);
    for (int k = 0; k < 16; ++k) {
      const Complex xi = std::polar(0.7 * chart.radius_V(), 2.0 * kPi * k / 16.0 + 0.1);
      const Complex z = chart.forward(xi);
      CHECK(std::abs(chart.inverse(z) - xi) < 1e-12);
      CHECK(std::abs(phi(z, lambda) - xi * xi) < 1e-12 * std::max(1.0, std::norm(xi)));
    }
    // to the left of the upward descent path the chart has negative real part
    CHECK(chart.inverse(0.95).real() < 0.0);
    CHECK(chart.inverse(1.05).real() > 0.0);
  }
}

TEST_CASE("Szego curve crosses the negative real axis at the root of |x| e^{1-x} = 1") {
  const Polyline c = limit_curve(1.0, 2000);
  // the far real crossing sits at t = +-pi
  const Complex left = c.points.front();
  CHECK(std::abs(left.real() + 0.278464542761074) < 1e-10);
  CHECK(std::abs(left.imag()) < 1e-10);
  for (Complex z : c.points) CHECK(std::abs(std::abs(z * std::exp(1.0 - z)) - 1.0) < 1e-10);
  CHECK(distance_to_polyline(c, 1.0) < 1e-12);
  CHECK(std::abs(distance_to_polyline(c, 1.5) - 0.5) < 1e-12);
}

TEST_CASE("descent path keeps Im phi = 0 and lands on the imaginary axis of the chart") {
  const DescentBranches d = steepest_descent_path(1.0, 0.8);
  const SaddleChart chart = build_chart(1.0);
  for (const Polyline* branch : {&d.upward, &d.downward}) {
    REQUIRE(branch->points.size() > 10);
    double prev = 1.0;
    for (Complex z : branch->points) {
      CHECK(std::abs(phi(z, 1.0).imag()) < 1e-10);
      CHECK(phi(z, 1.0).real() <= prev + 1e-14);
      prev = phi(z, 1.0).real();
      if (chart.in_domain(z)) CHECK(std::abs(chart.inverse(z).real()) < 1e-10);
    }
  }
}

TEST_CASE("sigma points for lambda = 1, theta = pi/3") {
  const SigmaPoints s = sigma_points(1.0, kPi / 3.0);
  CHECK(std::abs(std::abs(s.sigma1 - 1.0) - std::sin(kPi / 3.0)) < 1e-10);
  CHECK(std::abs(phi(s.sigma1, 1.0).imag()) < 1e-10);
  CHECK(s.sigma2 == std::conj(s.sigma1));
  CHECK(s.re_phi < 0.0);
}

TEST_CASE("admissible contour") {
  const Contour c = admissible_contour(1.0, kPi / 3.0, 0.05);
  CHECK(c.margin_achieved >= 0.05 - 1e-12);
  CHECK(c.segments.size() == 4);
  CHECK(std::abs(winding_number(c, 0.5) - 1.0) < 1e-8);
  CHECK(std::abs(winding_number(c, 0.0) - 1.0) < 1e-8);
  CHECK(std::abs(winding_number(c, 1.1)) < 1e-8);
  CHECK(std::abs(winding_number(c, {0.0, 3.0})) < 1e-8);
  // closed: consecutive segment ends meet
  for (std::size_t k = 0; k < c.segments.size(); ++k) {
    const ContourSegment& a = c.segments[k];
    const ContourSegment& b = c.segments[(k + 1) % c.segments.size()];
    CHECK(std::abs(a.point(a.t_end) - b.point(b.t_begin)) < 1e-10);
  }
  CHECK(sector_part(c).size() + off_sector_part(c).size() == c.segments.size());
  // the level-avoiding arcs keep Re phi at or below minus the margin
  for (const auto& [role, line] : sample_contour(c, 200))
    if (role == SegmentRole::LevelAvoiding)
      for (Complex z : line.points) CHECK(phi(z, 1.0).real() <= -c.margin_achieved + 1e-9);
}

TEST_CASE("ball about the saddle") {
  const Contour c = admissible_contour(1.0, kPi / 3.0, 0.05);
  CHECK(default_epsilon(c) == 0.1);
  const Gamma1 g = gamma1_circle(c, 0.1);
  CHECK(std::abs(std::abs(g.s1 - 1.0) - 0.2) < 1e-12);
  CHECK(std::abs(g.circle.point(g.angle1) - g.s1) < 1e-12);
  for (const ContourSegment& seg : outside_ball(c, g))
    for (int k = 0; k <= 10; ++k) {
      const double t = seg.t_begin + (seg.t_end - seg.t_begin) * k / 10.0;
      CHECK(std::abs(seg.point(t) - 1.0) >= 0.2 - 1e-10);
    }
}
