#include "psums/contour_quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace psums {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Legendre = boost::math::quadrature::gauss<double, 20>;

constexpr double kRoundoff = 2.2e-16;
// Relative targets below this are replaced by it: the panel rounding floor is 10 u.
constexpr double kTightestRelative = 20.0 * kRoundoff;

struct Panel {
  double a = 0.0, b = 0.0;
  Complex value;
  double error = 0.0;
  double l1 = 0.0;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod_panel(const std::function<Complex(double)>& f, double a, double b) {
  // boost stores the non-negative half of the symmetric rule
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();  // Gauss nodes are the even Kronrod nodes
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex k_sum = 0.0, g_sum = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      const Complex v = f(c);
      k_sum += wk[i] * v;
      l1 += wk[i] * std::abs(v);
      if (i % 2 == 0) g_sum += wg[i / 2] * v;
      continue;
    }
    const Complex v1 = f(c - h * x[i]), v2 = f(c + h * x[i]);
    k_sum += wk[i] * (v1 + v2);
    l1 += wk[i] * (std::abs(v1) + std::abs(v2));
    if (i % 2 == 0) g_sum += wg[i / 2] * (v1 + v2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * k_sum;
  p.l1 = std::abs(h) * l1;
  // QUADPACK-style sharpening of the raw Kronrod-Gauss difference
  const double raw = std::abs(h * (k_sum - g_sum));
  p.error = raw > 0.0 ? raw * std::min(1.0, std::pow(200.0 * raw / std::max(p.l1, 1e-300), 1.5)) : 0.0;
  p.error = std::max(p.error, 10.0 * kRoundoff * p.l1);
  if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag())) p.error = std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace

QuadratureResult adaptive_gauss_kronrod(const std::function<Complex(double)>& f, double a, double b, double rel_tol,
                                        double abs_tol, long max_nodes, const std::vector<double>& breaks) {
  rel_tol = std::max(rel_tol, kTightestRelative);
  std::vector<double> cuts{a};
  for (double t : breaks)
    if ((t - a) * (b - t) > 0.0) cuts.push_back(t);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end(), [&](double u, double v) { return a < b ? u < v : u > v; });

  QuadratureResult res;
  std::priority_queue<Panel> heap;
  Complex total = 0.0;
  double err = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Panel p = kronrod_panel(f, cuts[i], cuts[i + 1]);
    res.nodes += 15;
    total += p.value;
    err += p.error;
    l1 += p.l1;
    heap.push(p);
  }
  while (!(err <= std::max(abs_tol, rel_tol * l1))) {
    if (res.nodes + 30 > max_nodes || heap.empty()) break;
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) break;  // panel cannot shrink further
    heap.pop();
    const Panel left = kronrod_panel(f, worst.a, mid), right = kronrod_panel(f, mid, worst.b);
    res.nodes += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the panels to shed the drift of the running updates.
  total = 0.0;
  err = 0.0;
  l1 = 0.0;
  std::vector<Panel> panels;
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
  for (const Panel& p : panels) {
    total += p.value;
    err += p.error;
    l1 += p.l1;
  }
  res.value = total;
  res.error = err;
  res.l1 = l1;
  res.converged = err <= std::max(abs_tol, rel_tol * l1);
  return res;
}

Complex fixed_gauss_legendre(const std::function<Complex(double)>& f, double a, double b, int panels) {
  const auto& x = Legendre::abscissa();
  const auto& w = Legendre::weights();
  const double width = (b - a) / panels;
  Complex total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * width, h = 0.5 * width;
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) s += w[i] * f(c);
      else s += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    }
    total += h * s;
  }
  return total;
}

std::pair<double, double> nearest_parameter(const ContourSegment& seg, Complex z) {
  constexpr int kSamples = 256;
  const double a = seg.t_begin, b = seg.t_end;
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    const double t = a + (b - a) * i / kSamples;
    const double d = std::abs(seg.point(t) - z);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  // golden-section refinement on the bracketing samples
  double lo = a + (b - a) * std::max(0, best - 1) / kSamples;
  double hi = a + (b - a) * std::min(kSamples, best + 1) / kSamples;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = std::abs(seg.point(x1) - z), f2 = std::abs(seg.point(x2) - z);
  for (int it = 0; it < 80 && std::abs(hi - lo) > 1e-15 * (1.0 + std::abs(lo)); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = std::abs(seg.point(x1) - z);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = std::abs(seg.point(x2) - z);
    }
  }
  const double t = 0.5 * (lo + hi);
  const double d = std::abs(seg.point(t) - z);
  return d < best_d ? std::make_pair(t, d) : std::make_pair(a + (b - a) * best / kSamples, best_d);
}

std::pair<ContourSegment, ContourSegment> split_segment(const ContourSegment& seg, double t) {
  ContourSegment first = seg, second = seg;
  first.t_end = t;
  second.t_begin = t;
  return {first, second};
}

namespace {

template <bool LogForm, class Rho>
CauchyIntegralResult cauchy_impl(const std::vector<ContourSegment>& segments, const Rho& rho, Complex z, double tol) {
  if (!(tol > 0.0)) throw DomainError("cauchy integral: tolerance must be positive");
  const Complex inv_two_pi_i = 1.0 / (2.0 * kPi * kI);
  CauchyIntegralResult out;
  double total_l1 = 0.0;
  std::vector<QuadratureResult> parts;
  for (const ContourSegment& seg : segments) {
    const auto [t_near, dist] = nearest_parameter(seg, z);
    if (dist < 1e-12) throw DomainError("cauchy integral: z lies on the contour");
    double shift = 0.0;
    if constexpr (LogForm) {
      shift = -std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 64; ++i) {
        const double t = seg.t_begin + (seg.t_end - seg.t_begin) * i / 64.0;
        shift = std::max(shift, rho(seg.point(t)).real());
      }
      shift = std::max(shift, rho(seg.point(t_near)).real());
      if (std::isinf(shift)) continue;  // vanishing density
      if (shift > 700.0) throw RangeExceeded("cauchy integral: density exceeds double range");
    }
    auto integrand = [&](double t) -> Complex {
      const Complex s = seg.point(t);
      Complex value;
      if constexpr (LogForm) {
        const Complex l = rho(s);
        if (std::isinf(l.real()) && l.real() < 0.0) return 0.0;
        value = std::exp(l - shift);
      } else {
        value = rho(s);
      }
      return value * seg.tangent(t) / (s - z);
    };
    // a panel edge at the point nearest z keeps the near-singular peak at a panel end
    const std::vector<double> breaks{t_near};
    QuadratureResult q = adaptive_gauss_kronrod(integrand, seg.t_begin, seg.t_end, tol, 0.0, 2000000, breaks);
    const double factor = std::exp(shift);
    q.value *= factor;
    q.error *= factor;
    q.l1 *= factor;
    out.nodes += q.nodes;
    if (!q.converged) {
      std::ostringstream msg;
      msg << "cauchy integral: tolerance " << tol << " unreachable on a " << to_string(seg.role)
          << " segment (error " << q.error << ", l1 " << q.l1 << ", z = " << z << ")";
      throw NumericError(msg.str());
    }
    total_l1 += q.l1;
    parts.push_back(q);
  }
  for (const auto& q : parts) {
    out.value += q.value;
    out.error += q.error;
  }
  out.value *= inv_two_pi_i;
  out.error /= 2.0 * kPi;
  (void)total_l1;
  return out;
}

}  // namespace

CauchyIntegralResult cauchy_integral_log(const std::vector<ContourSegment>& segments, const LogDensity& log_rho,
                                         Complex z, double tol) {
  return cauchy_impl<true>(segments, log_rho, z, tol);
}

CauchyIntegralResult cauchy_integral(const std::vector<ContourSegment>& segments, const Density& rho, Complex z,
                                     double tol) {
  return cauchy_impl<false>(segments, rho, z, tol);
}

Complex cauchy_integral_fixed(const std::vector<ContourSegment>& segments, const LogDensity& log_rho, Complex z,
                              int panels_per_segment) {
  Complex total = 0.0;
  for (const ContourSegment& seg : segments) {
    auto integrand = [&](double t) -> Complex {
      const Complex s = seg.point(t);
      const Complex l = log_rho(s);
      if (std::isinf(l.real()) && l.real() < 0.0) return 0.0;
      return std::exp(l) * seg.tangent(t) / (s - z);
    };
    total += fixed_gauss_legendre(integrand, seg.t_begin, seg.t_end, panels_per_segment);
  }
  return total / (2.0 * kPi * kI);
}

}  // namespace psums
