#include "psums/saddle_geometry.hpp"

#include "psums/contour_quadrature.hpp"
#include "psums/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace psums {

namespace {

constexpr int kChartOrder = 40;

Complex power_lambda(Complex z, double lambda) {
  if (lambda == 1.0) return z;
  if (lambda == 2.0) return z * z;
  return std::exp(lambda * std::log(z));
}

// e^v - 1 - v
Complex exp_remainder(Complex v) {
  if (std::abs(v) < 0.5) {
    Complex term = v * v * 0.5;
    Complex sum = term;
    for (int k = 3; k < 40; ++k) {
      term *= v / static_cast<double>(k);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return std::exp(v) - 1.0 - v;
}

// e^v - 1
Complex exp_minus_one(Complex v) {
  if (std::abs(v) < 0.5) return exp_remainder(v) + v;
  return std::exp(v) - 1.0;
}

Complex horner(const std::vector<double>& coeffs, Complex x) {
  // coeffs[k] multiplies x^{k+1}
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc * x;
}

Complex horner_derivative(const std::vector<double>& coeffs, Complex x) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + static_cast<double>(k + 1) * coeffs[k];
  return acc;
}

using Series = std::vector<double>;  // index = power

Series multiply(const Series& a, const Series& b, std::size_t order) {
  Series c(order + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Newton corrector onto Im phi = 0, moving along the gradient of Im phi.
bool correct_onto_descent(Complex& z, double lambda) {
  for (int it = 0; it < 50; ++it) {
    const double residual = phi(z, lambda).imag();
    if (std::abs(residual) <= 1e-14 * std::max(1.0, std::abs(phi(z, lambda)))) return true;
    const Complex d = phi_derivative(z, lambda);
    const double speed = std::abs(d);
    if (speed == 0.0) return false;
    const Complex direction = kI * std::conj(d) / speed;
    z -= (residual / speed) * direction;
  }
  return std::abs(phi(z, lambda).imag()) <= 1e-12;
}

}  // namespace

Complex phi(Complex z, double lambda) {
  if (z == Complex(0.0, 0.0)) throw DomainError("phi: z = 0");
  const Complex t = z - 1.0;
  if (std::abs(t) < 0.25) {
    return exp_remainder(lambda * log1p_complex(t)) / lambda;
  }
  return (power_lambda(z, lambda) - 1.0 - lambda * std::log(z)) / lambda;
}

Complex phi_derivative(Complex z, double lambda) {
  if (z == Complex(0.0, 0.0)) throw DomainError("phi_derivative: z = 0");
  const Complex t = z - 1.0;
  if (std::abs(t) < 0.25) return exp_minus_one(lambda * log1p_complex(t)) / z;
  return (power_lambda(z, lambda) - 1.0) / z;
}

double scaling_radius(int n, double lambda) {
  if (n < 1) throw DomainError("scaling_radius: n must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("scaling_radius: lambda must be positive");
  return std::pow(static_cast<double>(n) / lambda, 1.0 / lambda);
}

// ---------------------------------------------------------------------------
// Chart

Complex SaddleChart::series(Complex xi) const { return 1.0 + horner(forward_, xi); }

Complex SaddleChart::inverse(Complex z) const {
  const Complex t = z - 1.0;
  if (std::abs(t) < 0.05) return horner(inverse_, t);
  const Complex q = phi(z, lambda_) / (0.5 * lambda_ * t * t);
  return std::sqrt(0.5 * lambda_) * t * std::sqrt(q);
}

namespace {

Complex chart_inverse_derivative(const SaddleChart& chart, const std::vector<double>& inv, Complex z) {
  const Complex t = z - 1.0;
  if (std::abs(t) < 0.05) return horner_derivative(inv, t);
  return phi_derivative(z, chart.lambda()) / (2.0 * chart.inverse(z));
}

}  // namespace

Complex SaddleChart::forward(Complex xi) const {
  if (xi == Complex(0.0, 0.0)) return 1.0;
  const double step_size = 0.15 * std::sqrt(2.0 * kPi / lambda_);
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(xi) / step_size)));
  Complex z = series(xi / static_cast<double>(steps));
  Complex previous_target = 0.0;
  for (int j = 1; j <= steps; ++j) {
    const Complex target = xi * (static_cast<double>(j) / steps);
    if (j > 1) {
      const Complex slope = 1.0 / chart_inverse_derivative(*this, inverse_, z);
      z += slope * (target - previous_target);
    }
    bool converged = false;
    double last_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
      const Complex residual = inverse(z) - target;
      const Complex dz = residual / chart_inverse_derivative(*this, inverse_, z);
      z -= dz;
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
      const double step = std::abs(dz);
      const double floor = 1e-15 * std::max(1.0, std::abs(z));
      // Stop at the rounding floor, or once steps stop shrinking near it.
      if (step <= floor || (step >= last_step && step <= 100.0 * floor)) {
        converged = true;
        break;
      }
      last_step = step;
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "chart: Newton inversion failed at xi = " << target.real() << "+" << target.imag() << "i";
      throw NumericError(msg.str());
    }
    previous_target = target;
  }
  return z;
}

Complex SaddleChart::forward_derivative(Complex xi) const {
  if (std::abs(xi) < 1e-3) return horner_derivative(forward_, xi);
  return 2.0 * xi / phi_derivative(forward(xi), lambda_);
}

bool SaddleChart::in_domain(Complex z) const {
  if (z == Complex(0.0, 0.0)) return false;
  const Complex xi = inverse(z);
  if (!(std::abs(xi) < radius_)) return false;
  try {
    return std::abs(forward(xi) - z) <= 1e-9 * std::max(1.0, std::abs(z));
  } catch (const NumericError&) {
    return false;
  }
}

SaddleChart build_chart(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("build_chart: lambda must be positive");
  SaddleChart chart;
  chart.lambda_ = lambda;
  const int order = kChartOrder;

  // phi(1+t) = sum_{k>=2} a_k t^k, a_k = (binom(lambda,k) + lambda (-1)^k / k) / lambda
  std::vector<double> a(order + 3, 0.0);
  double binom = 1.0;
  for (int k = 1; k <= order + 2; ++k) {
    binom *= (lambda - (k - 1)) / k;
    if (k >= 2) a[k] = (binom + lambda * ((k % 2 == 0) ? 1.0 : -1.0) / k) / lambda;
  }
  // sqrt(phi(1+t)) = sqrt(a_2) t sqrt(1 + sum_j g_j t^j)
  std::vector<double> g(order + 1, 0.0);
  g[0] = 1.0;
  for (int j = 1; j <= order; ++j) g[j] = a[j + 2] / a[2];
  std::vector<double> s(order + 1, 0.0);
  s[0] = 1.0;
  for (int j = 1; j <= order; ++j) {
    double acc = g[j];
    for (int i = 1; i < j; ++i) acc -= s[i] * s[j - i];
    s[j] = 0.5 * acc;
  }
  const double lead = std::sqrt(0.5 * lambda);
  chart.inverse_.assign(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) chart.inverse_[k] = lead * s[k];

  // Series reversion by fixed-point iteration: t = (xi - sum_{k>=2} e_k t^k) / e_1.
  const std::size_t m = order + 1;
  Series t(m + 1, 0.0);
  t[1] = 1.0 / chart.inverse_[0];
  for (std::size_t pass = 0; pass < m; ++pass) {
    Series next(m + 1, 0.0);
    next[1] = 1.0;
    Series power = t;
    for (std::size_t k = 2; k <= m; ++k) {
      power = multiply(power, t, m);
      const double e = chart.inverse_[k - 1];
      for (std::size_t i = 0; i <= m; ++i) next[i] -= e * power[i];
    }
    for (double& v : next) v /= chart.inverse_[0];
    t = next;
  }
  chart.forward_.assign(t.begin() + 1, t.end());

  std::ostringstream tag;
  tag << "principal sqrt of phi/((lambda/2)(z-1)^2); Re psi^-1 < 0 left of the upward descent path";
  chart.branch_tag_ = tag.str();

  // Largest radius on which the round trip validates.
  double radius = 0.8 * std::sqrt(2.0 * kPi / lambda);
  for (int attempt = 0; attempt < 60; ++attempt, radius *= 0.9) {
    chart.radius_ = radius;
    bool ok = true;
    for (double frac : {0.25, 0.5, 0.75, 1.0}) {
      for (int j = 0; j < 48 && ok; ++j) {
        const Complex xi = std::polar(frac * radius, 2.0 * kPi * (j + 0.5) / 48.0);
        try {
          const Complex z = chart.forward(xi);
          if (std::abs(z) < 1e-2) {
            ok = false;
            break;
          }
          const double scale = std::max(1.0, std::norm(xi));
          if (std::abs(chart.inverse(z) - xi) > 1e-12 * std::max(1.0, std::abs(xi)) ||
              std::abs(phi(z, lambda) - xi * xi) > 1e-12 * scale) {
            ok = false;
          }
        } catch (const NumericError&) {
          ok = false;
        }
      }
      if (!ok) break;
    }
    if (ok) return chart;
  }
  throw NumericError("build_chart: no validated radius found");
}

// ---------------------------------------------------------------------------
// Curves

double distance_to_polyline(const Polyline& curve, Complex z) {
  if (curve.points.empty()) throw DomainError("distance_to_polyline: empty curve");
  double best = std::abs(curve.points.front() - z);
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const Complex a = curve.points[k - 1], d = curve.points[k] - a;
    const double len2 = std::norm(d);
    const double t = len2 > 0.0 ? std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, std::abs(a + t * d - z));
  }
  return best;
}

Polyline limit_curve(double lambda, int resolution) {
  if (resolution < 16) throw DomainError("limit_curve: resolution must be >= 16");
  if (!(lambda > 0.0)) throw DomainError("limit_curve: lambda must be positive");
  Polyline out;
  out.points.reserve(resolution + 1);
  double r_prev = 1.0;
  // g(r) = r^lambda cos(lambda t) - 1 - lambda log r, strictly decreasing on (0, 1].
  for (int j = 0; j <= resolution; ++j) {
    const double t = -kPi + 2.0 * kPi * j / resolution;
    const double c = std::cos(lambda * t);
    auto g = [&](double r) { return std::pow(r, lambda) * c - 1.0 - lambda * std::log(r); };
    double r;
    if (std::abs(t) < 1e-15) {
      r = 1.0;
    } else {
      double hi = 1.0;
      double lo = std::min(r_prev, 1.0) * 0.5;
      int guard = 0;
      while (g(lo) <= 0.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 2000) throw NumericError("limit_curve: no bracket");
      }
      r = std::clamp(r_prev, lo, hi);
      if (r >= hi || r <= lo) r = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        const double value = g(r);
        if (value > 0.0) lo = r; else hi = r;
        const double slope = lambda * std::pow(r, lambda - 1.0) * c - lambda / r;
        double next = r - value / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - r) <= 1e-16 * r || hi - lo <= 1e-16 * hi) {
          r = next;
          break;
        }
        r = next;
      }
      if (std::abs(g(r)) > 1e-10 * lambda) throw NumericError("limit_curve: corrector failed");
    }
    r_prev = r;
    out.points.push_back(std::polar(r, t));
  }
  return out;
}

DescentBranches steepest_descent_path(double lambda, double arclength) {
  if (!(arclength > 0.0)) throw DomainError("steepest_descent_path: arclength must be positive");
  Polyline up;
  up.points.push_back(1.0);
  Complex z = Complex(1.0, 1e-7);
  if (!correct_onto_descent(z, lambda)) throw NumericError("steepest_descent_path: first step failed");
  up.points.push_back(z);
  double travelled = std::abs(z - 1.0);
  double h = 1e-6;
  const double h_max = std::min(0.01, arclength / 16.0);
  while (travelled < arclength) {
    const Complex d = phi_derivative(z, lambda);
    if (std::abs(d) == 0.0) throw NumericError("steepest_descent_path: critical point on the path");
    const double step = std::min(h, arclength - travelled);
    Complex candidate = z - step * std::conj(d) / std::abs(d);
    const double re_before = phi(z, lambda).real();
    if (correct_onto_descent(candidate, lambda) && phi(candidate, lambda).real() < re_before &&
        std::abs(candidate - z) < 2.0 * step) {
      travelled += std::abs(candidate - z);
      z = candidate;
      up.points.push_back(z);
      if (std::abs(z) < 1e-3) break;
      h = std::min(2.0 * h, h_max);
    } else {
      h *= 0.5;
      if (h < 1e-12) throw NumericError("steepest_descent_path: step control exhausted");
    }
  }
  DescentBranches out;
  out.upward = up;
  for (Complex p : up.points) out.downward.points.push_back(std::conj(p));
  return out;
}

SigmaPoints sigma_points(double lambda, double theta, const SaddleChart& chart) {
  if (!(theta > 0.0 && theta < std::min(kPi, kPi / lambda))) {
    throw DomainError("sigma_points: theta must satisfy 0 < theta < min(pi, pi/lambda)");
  }
  const double radius = std::sin(theta);
  const double u_cap = 0.9 * chart.radius_V();
  auto distance = [&](double u) { return std::abs(chart.forward(Complex(0.0, u)) - 1.0); };
  SigmaPoints out;
  if (distance(u_cap) >= radius) {
    double lo = 0.0, hi = u_cap;
    // Bracket the first crossing by scanning outward.
    const int scan = 64;
    for (int j = 1; j <= scan; ++j) {
      const double u = u_cap * j / scan;
      if (distance(u) >= radius) {
        hi = u;
        lo = u_cap * (j - 1) / scan;
        break;
      }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (distance(mid) < radius) lo = mid; else hi = mid;
    }
    out.descent_u = 0.5 * (lo + hi);
    out.sigma1 = chart.forward(Complex(0.0, out.descent_u));
  } else {
    // Beyond the chart: walk the traced path and bisect on the last chord.
    const DescentBranches path = steepest_descent_path(lambda, 4.0 * radius + 1.0);
    const auto& pts = path.upward.points;
    std::size_t j = 1;
    while (j < pts.size() && std::abs(pts[j] - 1.0) < radius) ++j;
    if (j == pts.size()) throw NumericError("sigma_points: descent path does not reach the circle");
    double lo = 0.0, hi = 1.0;
    Complex best = pts[j];
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      Complex p = pts[j - 1] + mid * (pts[j] - pts[j - 1]);
      correct_onto_descent(p, lambda);
      best = p;
      if (std::abs(p - 1.0) < radius) lo = mid; else hi = mid;
    }
    out.sigma1 = best;
    out.descent_u = std::sqrt(std::max(0.0, -phi(best, lambda).real()));
  }
  out.sigma2 = std::conj(out.sigma1);
  out.re_phi = phi(out.sigma1, lambda).real();
  return out;
}

SigmaPoints sigma_points(double lambda, double theta) {
  return sigma_points(lambda, theta, build_chart(lambda));
}

std::string to_string(SegmentRole role) {
  switch (role) {
    case SegmentRole::SteepestDescent:
      return "steepest_descent";
    case SegmentRole::LevelAvoiding:
      return "level_avoiding";
    case SegmentRole::UnitCircle:
      return "unit_circle";
    case SegmentRole::Gamma1Circle:
      return "gamma1_circle";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Contour

namespace {

ContourSegment descent_segment(std::shared_ptr<const SaddleChart> chart, double u_from, double u_to) {
  ContourSegment seg;
  seg.role = SegmentRole::SteepestDescent;
  seg.t_begin = u_from;
  seg.t_end = u_to;
  seg.in_sector = true;
  seg.point = [chart](double u) { return chart->forward(Complex(0.0, u)); };
  seg.tangent = [chart](double u) { return kI * chart->forward_derivative(Complex(0.0, u)); };
  return seg;
}

// Cubic Hermite blend in (arg z, log|z|) from the descent endpoint to e^{i theta}.
struct Blend {
  double alpha0, theta, ell0, slope0;
  double ell(double alpha) const {
    const double h = theta - alpha0;
    const double s = (alpha - alpha0) / h;
    return (2 * s * s * s - 3 * s * s + 1) * ell0 + (s * s * s - 2 * s * s + s) * h * slope0;
  }
  double ell_prime(double alpha) const {
    const double h = theta - alpha0;
    const double s = (alpha - alpha0) / h;
    return ((6 * s * s - 6 * s) * ell0 + (3 * s * s - 4 * s + 1) * h * slope0) / h;
  }
  Complex point(double alpha) const { return std::exp(Complex(ell(alpha), alpha)); }
  Complex tangent(double alpha) const { return Complex(ell_prime(alpha), 1.0) * point(alpha); }
};

std::pair<Blend, double> make_blend(const SaddleChart& chart, double lambda, double theta, double u) {
  const Complex q = chart.forward(Complex(0.0, u));
  const Complex dq = kI * chart.forward_derivative(Complex(0.0, u));
  const Complex w = dq / q;
  Blend b{std::arg(q), theta, std::log(std::abs(q)), 0.0};
  if (!(w.imag() > 0.0) || !(b.alpha0 < theta)) return {b, -std::numeric_limits<double>::infinity()};
  b.slope0 = w.real() / w.imag();
  double worst = -std::numeric_limits<double>::infinity();
  const int samples = 400;
  for (int j = 0; j <= samples; ++j) {
    const double alpha = b.alpha0 + (theta - b.alpha0) * j / samples;
    worst = std::max(worst, phi(b.point(alpha), lambda).real());
  }
  return {b, -worst};
}

}  // namespace

Contour admissible_contour(double lambda, double theta, double margin) {
  if (!(margin > 0.0)) throw DomainError("admissible_contour: margin must be positive");
  auto chart = std::make_shared<const SaddleChart>(build_chart(lambda));
  const SigmaPoints sigma = sigma_points(lambda, theta, *chart);
  const double u_cap = 0.9 * chart->radius_V();

  double best_d = -std::numeric_limits<double>::infinity();
  double best_u = 0.0;
  Blend best_blend{};
  for (double frac : {1.0, 0.9, 0.8, 0.7, 0.6, 0.5}) {
    const double u = std::min(frac * sigma.descent_u, u_cap);
    auto [blend, d] = make_blend(*chart, lambda, theta, u);
    if (d > best_d) {
      best_d = d;
      best_u = u;
      best_blend = blend;
    }
  }
  if (!(best_d >= margin)) {
    std::ostringstream msg;
    msg << "admissible_contour: margin " << margin << " infeasible (best achieved " << best_d << ")";
    throw NumericError(msg.str());
  }

  Contour c;
  c.lambda = lambda;
  c.theta = theta;
  c.margin_requested = margin;
  c.margin_achieved = best_d;
  c.descent_u_max = best_u;
  c.sigma1 = sigma.sigma1;
  c.sigma2 = sigma.sigma2;
  c.sigma_re_phi = sigma.re_phi;
  c.chart = chart;

  c.segments.push_back(descent_segment(chart, -best_u, best_u));

  ContourSegment upper;
  upper.role = SegmentRole::LevelAvoiding;
  upper.in_sector = true;
  upper.t_begin = best_blend.alpha0;
  upper.t_end = theta;
  upper.point = [best_blend](double a) { return best_blend.point(a); };
  upper.tangent = [best_blend](double a) { return best_blend.tangent(a); };
  c.segments.push_back(upper);

  ContourSegment circle;
  circle.role = SegmentRole::UnitCircle;
  circle.t_begin = theta;
  circle.t_end = 2.0 * kPi - theta;
  circle.point = [](double t) { return std::polar(1.0, t); };
  circle.tangent = [](double t) { return kI * std::polar(1.0, t); };
  c.segments.push_back(circle);

  ContourSegment lower;
  lower.role = SegmentRole::LevelAvoiding;
  lower.in_sector = true;
  lower.t_begin = -theta;
  lower.t_end = -best_blend.alpha0;
  lower.point = [best_blend](double a) { return std::conj(best_blend.point(-a)); };
  lower.tangent = [best_blend](double a) { return -std::conj(best_blend.tangent(-a)); };
  c.segments.push_back(lower);
  return c;
}

double default_epsilon(const Contour& contour) {
  if (contour.lambda == 1.0) return 0.1;
  static const double reference = build_chart(1.0).radius_V();
  return 0.1 * contour.chart->radius_V() / reference;
}

Gamma1 gamma1_circle(const Contour& contour, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("gamma1_circle: epsilon must be positive");
  const SaddleChart& chart = *contour.chart;
  const double radius = 2.0 * epsilon;
  const double u_max = contour.descent_u_max;
  auto distance = [&](double u) { return std::abs(chart.forward(Complex(0.0, u)) - 1.0); };
  if (distance(u_max) <= radius) throw DomainError("gamma1_circle: epsilon too large for the descent arc");
  for (int j = 0; j < 64; ++j) {
    const Complex z = 1.0 + std::polar(radius, 2.0 * kPi * j / 64.0);
    if (!chart.in_domain(z) || std::abs(chart.inverse(z)) >= 0.9 * chart.radius_V()) {
      throw DomainError("gamma1_circle: epsilon too large for the chart");
    }
  }
  double lo = 0.0, hi = u_max;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (distance(mid) < radius) lo = mid; else hi = mid;
  }
  Gamma1 g;
  g.epsilon = epsilon;
  g.descent_u = 0.5 * (lo + hi);
  g.s1 = chart.forward(Complex(0.0, g.descent_u));
  g.s2 = std::conj(g.s1);
  g.angle1 = std::arg(g.s1 - 1.0);
  g.angle2 = -g.angle1;
  g.circle.role = SegmentRole::Gamma1Circle;
  g.circle.t_begin = g.angle2;
  g.circle.t_end = g.angle2 + 2.0 * kPi;
  g.circle.point = [radius](double t) { return 1.0 + std::polar(radius, t); };
  g.circle.tangent = [radius](double t) { return kI * std::polar(radius, t); };
  return g;
}

std::vector<ContourSegment> sector_part(const Contour& contour) {
  std::vector<ContourSegment> out;
  for (const auto& s : contour.segments) {
    if (s.in_sector) out.push_back(s);
  }
  return out;
}

std::vector<ContourSegment> off_sector_part(const Contour& contour) {
  std::vector<ContourSegment> out;
  for (const auto& s : contour.segments) {
    if (!s.in_sector) out.push_back(s);
  }
  return out;
}

std::vector<ContourSegment> outside_ball(const Contour& contour, const Gamma1& ball) {
  std::vector<ContourSegment> out;
  for (const auto& s : contour.segments) {
    if (s.role == SegmentRole::SteepestDescent) {
      ContourSegment lower = s;
      lower.t_end = -ball.descent_u;
      ContourSegment upper = s;
      upper.t_begin = ball.descent_u;
      out.push_back(lower);
      out.push_back(upper);
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<ContourSegment> sector_outside_ball(const Contour& contour, const Gamma1& ball) {
  std::vector<ContourSegment> out;
  for (const auto& s : outside_ball(contour, ball)) {
    if (s.in_sector) out.push_back(s);
  }
  return out;
}

std::vector<std::pair<SegmentRole, Polyline>> sample_contour(const Contour& contour, int points_per_segment) {
  if (points_per_segment < 2) throw DomainError("sample_contour: need at least 2 points per segment");
  std::vector<std::pair<SegmentRole, Polyline>> out;
  for (const auto& s : contour.segments) {
    Polyline p;
    for (int j = 0; j < points_per_segment; ++j) {
      const double t = s.t_begin + (s.t_end - s.t_begin) * j / (points_per_segment - 1);
      p.points.push_back(s.point(t));
    }
    out.emplace_back(s.role, std::move(p));
  }
  return out;
}

double winding_number(const Contour& contour, Complex center) {
  Complex total = 0.0;
  for (const auto& s : contour.segments) {
    const double t_near = nearest_parameter(s, center).first;
    auto integrand = [&](double t) { return s.tangent(t) / (s.point(t) - center); };
    total += adaptive_gauss_kronrod(integrand, s.t_begin, s.t_end, 1e-8, 0.0, 200000, {t_near}).value;
  }
  return total.imag() / (2.0 * kPi);
}

}  // namespace psums
