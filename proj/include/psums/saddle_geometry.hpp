#pragma once

#include "psums/types.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace psums {

/// (z^lambda - 1 - lambda Log z)/lambda with principal branches; accurate near z = 1.
Complex phi(Complex z, double lambda);
/// phi'(z) = (z^lambda - 1)/z.
Complex phi_derivative(Complex z, double lambda);

/// (n/lambda)^{1/lambda}
double scaling_radius(int n, double lambda);

/// Conformal chart psi: V -> U with phi(psi(xi)) = xi^2 and psi(0) = 1.
///
/// The inverse is sqrt(lambda/2) (z-1) sqrt(phi(z) / ((lambda/2)(z-1)^2)) with the
/// principal square root, so Re psi^{-1}(z) < 0 exactly to the left of the
/// upward descent path. The forward map is a reverted power series polished by Newton.
class SaddleChart {
 public:
  double lambda() const { return lambda_; }
  /// Radius in the xi-plane on which the round trip was validated.
  double radius_V() const { return radius_; }
  const std::string& branch_tag() const { return branch_tag_; }
  /// Coefficients b_1, b_2, ... of psi(xi) - 1 = sum b_k xi^k.
  const std::vector<double>& forward_coefficients() const { return forward_; }

  Complex forward(Complex xi) const;
  Complex forward_derivative(Complex xi) const;
  Complex inverse(Complex z) const;
  /// Whether z lies in the validated image psi(|xi| < radius_V).
  bool in_domain(Complex z) const;

 private:
  friend SaddleChart build_chart(double lambda);
  Complex series(Complex xi) const;
  double lambda_ = 1.0;
  double radius_ = 0.0;
  std::string branch_tag_;
  std::vector<double> forward_;
  std::vector<double> inverse_;  // sqrt(phi(1+t)) = sum e_k t^k
};

SaddleChart build_chart(double lambda);

struct Polyline {
  std::vector<Complex> points;
};

/// Bounded component of Re phi = 0 through z = 1, traced in polar form
/// r(t), t in [-pi, pi], with a Newton corrector on each ray.
Polyline limit_curve(double lambda, int resolution);

/// Euclidean distance from z to the piecewise-linear curve through the points.
double distance_to_polyline(const Polyline& curve, Complex z);

struct DescentBranches {
  Polyline upward;
  Polyline downward;
};

/// Steepest-descent path of Re phi through z = 1 (Im phi = 0), traced by
/// predictor-corrector continuation for the given arclength on each branch.
DescentBranches steepest_descent_path(double lambda, double arclength);

struct SigmaPoints {
  Complex sigma1;
  Complex sigma2;
  double re_phi = 0.0;
  /// Descent parameter u with sigma1 = psi(i u).
  double descent_u = 0.0;
};

/// Intersection of the descent path with the circle |z - 1| = sin(theta).
SigmaPoints sigma_points(double lambda, double theta, const SaddleChart& chart);
SigmaPoints sigma_points(double lambda, double theta);

enum class SegmentRole { SteepestDescent, LevelAvoiding, UnitCircle, Gamma1Circle };
std::string to_string(SegmentRole role);

struct ContourSegment {
  SegmentRole role = SegmentRole::UnitCircle;
  double t_begin = 0.0;
  double t_end = 1.0;
  /// Point and derivative with respect to the parameter t.
  std::function<Complex(double)> point;
  std::function<Complex(double)> tangent;
  /// Part of the sector |arg z| <= theta.
  bool in_sector = false;
};

struct Contour {
  std::vector<ContourSegment> segments;
  double lambda = 1.0;
  double theta = 0.0;
  /// Requested and achieved level margins: Re phi <= -margin_achieved on level-avoiding arcs.
  double margin_requested = 0.0;
  double margin_achieved = 0.0;
  /// Descent arc is psi(i u) for |u| <= descent_u_max.
  double descent_u_max = 0.0;
  Complex sigma1, sigma2;
  double sigma_re_phi = 0.0;
  std::shared_ptr<const SaddleChart> chart;
};

/// Closed counterclockwise contour: descent arc through 1, level-avoiding blends out to
/// e^{+-i theta}, unit circle on |arg z| >= theta.
Contour admissible_contour(double lambda, double theta, double margin);

struct Gamma1 {
  double epsilon = 0.0;
  /// Circle of radius 2 epsilon about 1, counterclockwise.
  ContourSegment circle;
  Complex s1, s2;
  /// Descent parameters of s1 = psi(i u1), s2 = psi(-i u1).
  double descent_u = 0.0;
  /// Circle angles of s1 and s2 (the points where densities jump).
  double angle1 = 0.0, angle2 = 0.0;
};

Gamma1 gamma1_circle(const Contour& contour, double epsilon);

/// Default ball radius: 0.1 for lambda = 1, otherwise scaled by the chart radius.
double default_epsilon(const Contour& contour);

/// Segments of the contour inside the sector (gamma_theta).
std::vector<ContourSegment> sector_part(const Contour& contour);
/// Segments of the contour outside the sector (the unit-circle arc).
std::vector<ContourSegment> off_sector_part(const Contour& contour);
/// Contour minus the ball B_{2 epsilon}(1).
std::vector<ContourSegment> outside_ball(const Contour& contour, const Gamma1& ball);
/// Sector part minus the ball.
std::vector<ContourSegment> sector_outside_ball(const Contour& contour, const Gamma1& ball);

/// Polyline samples of each segment, for export.
std::vector<std::pair<SegmentRole, Polyline>> sample_contour(const Contour& contour,
                                                             int points_per_segment);

/// Winding number about `center` via the integral of dz/(z - center).
double winding_number(const Contour& contour, Complex center);

}  // namespace psums
