// Zeros of scaled sections by Aberth-Ehrlich iteration with certified inclusion disks.
#include "psums/partial_sums.hpp"
#include "psums/saddle_geometry.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <numeric>
#include <sstream>

namespace psums {

namespace {

constexpr int kMaxSweeps = 200;
constexpr double kStepTolerance = 1e-14;
constexpr double kRadiusTolerance = 1e-10;
constexpr double kBackwardTolerance = 1e-8;

bool cheap_ratio(const EntireFunctionModel& model) {
  return model.kind() == ModelKind::Exp || model.kind() == ModelKind::Section5 ||
         (model.kind() == ModelKind::MittagLeffler && model.lambda() == 1.0);
}

// log(c_k s^k) for k = 0..degree in working precision.
template <class Real>
std::vector<std::complex<Real>> scaled_log_coefficients(const EntireFunctionModel& model, int degree, double scale) {
  using std::log;
  const Real log_s = log(Real(scale));
  std::vector<std::complex<Real>> out(degree + 1);
  out[0] = model.log_coefficient<Real>(0);
  const bool recur = cheap_ratio(model);
  for (int k = 1; k <= degree; ++k) {
    if (recur) {
      const std::complex<Real> r = model.log_coefficient_ratio<Real>(k - 1);
      out[k] = std::complex<Real>(out[k - 1].real() + r.real() + log_s, out[k - 1].imag() + r.imag());
    } else {
      const std::complex<Real> c = model.log_coefficient<Real>(k);
      out[k] = std::complex<Real>(c.real() + Real(k) * log_s, c.imag());
    }
  }
  return out;
}

struct RootEval {
  Complex newton;       // p/p'
  double radius = 0.0;  // inclusion radius n(|p| + err)/(|p'| - err)
  double backward = 0.0;
  double condition = 0.0;  // sum |a_k||z|^k / (|p'| max(1,|z|))
};

template <class Real>
class ScaledPolynomial {
 public:
  using C = std::complex<Real>;

  ScaledPolynomial(const EntireFunctionModel& model, int degree, double scale) : n_(degree) {
    using std::abs;
    using std::exp;
    const auto logs = scaled_log_coefficients<Real>(model, degree, scale);
    Real top = -std::numeric_limits<Real>::infinity();
    for (const auto& l : logs)
      if (l.real() > top) top = l.real();
    coeff_.resize(degree + 1);
    abs_.resize(degree + 1);
    log_rel_.resize(degree + 1);
    Real worst(0);
    for (int k = 0; k <= degree; ++k) {
      const Real rel = logs[k].real() - top;
      log_rel_[k] = to_double(rel);
      const Real m = isinf(rel) ? Real(0) : exp(rel);
      coeff_[k] = C(m * cos(logs[k].imag()), m * sin(logs[k].imag()));
      abs_[k] = m;
      if (!isinf(rel)) {
        const Real w = abs(rel) + abs(logs[k].imag()) + Real(k) * (Real(1) + Real(std::log(double(k) + 1.0)) + abs(Real(std::log(scale))));
        if (w > worst) worst = w;
      }
    }
    const Real u = unit_roundoff<Real>();
    gamma_real_ = u * (Real(8 * degree + 8) + Real(4) * worst);
  }

  int degree() const { return n_; }
  const std::vector<double>& log_relative() const { return log_rel_; }
  const C& coefficient(int k) const { return coeff_[k]; }
  bool representable() const {
    // Coefficients that underflowed to zero in this format would fake roots at 0 or infinity.
    return abs_.front() > Real(0) && abs_.back() > Real(0);
  }

  RootEval eval(Complex zd) const {
    using std::abs;
    const C z = from_double<Real>(zd);
    const Real az = abs(z);
    const Real n_r(n_);
    RootEval out;
    if (az <= Real(1)) {
      C p = coeff_[n_], dp(0);
      Real mag = abs_[n_], dmag(0);
      for (int k = n_ - 1; k >= 0; --k) {
        dp = dp * z + p;
        dmag = dmag * az + mag;
        p = p * z + coeff_[k];
        mag = mag * az + abs_[k];
      }
      const Real ap = abs(p), adp = abs(dp);
      const Real ep = gamma_real_ * mag, edp = gamma_real_ * dmag;
      out.newton = adp > Real(0) ? to_double(C(p / dp)) : Complex(0.0, 0.0);
      out.radius = adp > edp ? to_double(n_r * (ap + ep) / (adp - edp)) : std::numeric_limits<double>::infinity();
      out.backward = mag > Real(0) ? to_double(ap / mag) : 0.0;
      out.condition = adp > Real(0) ? to_double(mag / (adp * (az > Real(1) ? az : Real(1)))) : std::numeric_limits<double>::infinity();
    } else {
      // Reversed polynomial in y = 1/z: p(z) = z^n R(y), p'(z) = z^{n-1}(n R - y R').
      const C y = C(Real(1)) / z;
      const Real ay = Real(1) / az;
      C r = coeff_[0], dr(0);
      Real mr = abs_[0], dmr(0);
      for (int k = 1; k <= n_; ++k) {
        dr = dr * y + r;
        dmr = dmr * ay + mr;
        r = r * y + coeff_[k];
        mr = mr * ay + abs_[k];
      }
      const C d = n_r * r - y * dr;
      const Real ar = abs(r), ad = abs(d);
      const Real er = gamma_real_ * mr, ed = gamma_real_ * (n_r * mr + ay * dmr);
      out.newton = ad > Real(0) ? to_double(C(z * r / d)) : Complex(0.0, 0.0);
      out.radius = ad > ed ? to_double(n_r * az * (ar + er) / (ad - ed)) : std::numeric_limits<double>::infinity();
      out.backward = mr > Real(0) ? to_double(ar / mr) : 0.0;
      out.condition = ad > Real(0) ? to_double(n_r * mr / ad) : std::numeric_limits<double>::infinity();
    }
    return out;
  }

 private:
  int n_;
  std::vector<C> coeff_;
  std::vector<Real> abs_;
  std::vector<double> log_rel_;
  Real gamma_real_;
};

// Starting points from the Newton polygon of log|a_k|: one circle per hull edge.
std::vector<Complex> initial_points(const std::vector<double>& log_rel) {
  const int n = int(log_rel.size()) - 1;
  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    if (std::isinf(log_rel[k])) continue;
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2], j = hull.back();
      // drop j unless it lies strictly above the chord i -> k
      const double cross = (log_rel[j] - log_rel[i]) * double(k - i) - (log_rel[k] - log_rel[i]) * double(j - i);
      if (cross <= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<Complex> pts;
  pts.reserve(n);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e], j = hull[e + 1];
    const int count = j - i;
    const double radius = std::exp((log_rel[i] - log_rel[j]) / double(count));
    for (int m = 0; m < count; ++m) {
      const double angle = 2.0 * kPi * m / count + 2.0 * kPi * i / n + 0.7;
      pts.push_back(std::polar(radius, angle));
    }
  }
  return pts;
}

struct RungResult {
  std::vector<Complex> zeros;
  std::vector<RootEval> evals;
  int sweeps = 0;
  bool certified = false;
  double needed_unit_roundoff = 0.0;
};

bool disks_disjoint(const std::vector<Complex>& z, const std::vector<RootEval>& e) {
  std::vector<std::size_t> idx(z.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return z[a].real() < z[b].real(); });
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const std::size_t i = idx[a], j = idx[b];
      const double reach = e[i].radius + e[j].radius;
      if (z[j].real() - z[i].real() > reach) break;
      if (std::abs(z[i] - z[j]) <= reach) return false;
    }
  }
  return true;
}

template <class Real>
RungResult run_rung(const ScaledPolynomial<Real>& poly, std::vector<Complex> z, bool final_polish) {
  const int n = poly.degree();
  RungResult res;
  if (n == 1) {
    const auto a0 = poly.coefficient(0), a1 = poly.coefficient(1);
    z = {to_double(std::complex<Real>(-a0 / a1))};
  } else {
    std::vector<char> done(n, 0);
    double best = std::numeric_limits<double>::infinity();
    int since_best = 0;
    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
      res.sweeps = sweep;
      double max_step = 0.0;
      bool active = false;
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        active = true;
        const RootEval ev = poly.eval(z[i]);
        const Complex newton = ev.newton;
        if (newton == Complex(0.0, 0.0)) {
          done[i] = 1;
          continue;
        }
        Complex s(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          Complex diff = z[i] - z[j];
          if (diff == Complex(0.0, 0.0)) diff = Complex(1e-12 * std::max(1.0, std::abs(z[i])), 0.0);
          s += 1.0 / diff;
        }
        Complex step = newton / (1.0 - newton * s);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = newton;
        z[i] -= step;
        const double size = std::abs(step);
        max_step = std::max(max_step, size / std::max(1.0, std::abs(z[i])));
        if (size <= kStepTolerance * std::max(1.0, std::abs(z[i]))) done[i] = 1;
      }
      if (!active) break;
      if (max_step < 0.5 * best) {
        best = max_step;
        since_best = 0;
      } else if (!final_polish && ++since_best >= 12) {
        break;  // stagnated at this precision
      }
    }
  }

  if (final_polish) {
    for (int i = 0; i < n; ++i) {
      for (int it = 0; it < 3; ++it) {
        const RootEval here = poly.eval(z[i]);
        const Complex cand = z[i] - here.newton;
        if (cand == z[i]) break;
        const RootEval there = poly.eval(cand);
        if (!(there.backward < here.backward)) break;
        z[i] = cand;
      }
    }
  }

  res.evals.resize(n);
  bool ok = true;
  double worst_cond = 0.0;
  for (int i = 0; i < n; ++i) {
    res.evals[i] = poly.eval(z[i]);
    const double scale = std::max(1.0, std::abs(z[i]));
    if (!(res.evals[i].radius <= kRadiusTolerance * scale) || !(res.evals[i].backward <= kBackwardTolerance)) ok = false;
    worst_cond = std::max(worst_cond, res.evals[i].condition);
  }
  if (ok) ok = disks_disjoint(z, res.evals);
  res.certified = ok;
  res.needed_unit_roundoff = kRadiusTolerance / (16.0 * n * std::max(worst_cond, 1.0));
  res.zeros = std::move(z);
  return res;
}

double rung_unit_roundoff(Precision p) {
  return dispatch_precision(p, []<class Real>() { return to_double(unit_roundoff<Real>()); });
}

}  // namespace

std::string to_string(ZeroScaling s) {
  switch (s) {
    case ZeroScaling::ByN:
      return "by_n";
    case ZeroScaling::ByRn:
      return "by_r_n";
    case ZeroScaling::None:
    default:
      return "none";
  }
}

ZeroScaling zero_scaling_from_string(const std::string& s) {
  if (s == "by_n") return ZeroScaling::ByN;
  if (s == "by_r_n") return ZeroScaling::ByRn;
  if (s == "none") return ZeroScaling::None;
  throw DomainError("unknown zero scaling '" + s + "' (expected by_n, by_r_n or none)");
}

ZeroCloud section_zeros(const EntireFunctionModel& model, int degree, double scale, Precision ceiling) {
  if (degree < 1) throw DomainError("zero_cloud: n must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("zero_cloud: scale must be positive");
  if (model.max_degree() >= 0 && degree > model.max_degree())
    throw DomainError("zero_cloud: section index exceeds the coefficient table");
  if (std::isinf(model.log_coefficient<double>(degree).real())) throw DomainError("zero_cloud: leading coefficient vanishes");

  ZeroCloud cloud;
  cloud.n = degree;
  cloud.scale = scale;
  std::vector<Complex> current;
  const std::vector<Precision> ladder = ladder_up_to(ceiling);
  double needed = 1.0;
  double last_radius = 0.0;
  for (std::size_t r = 0; r < ladder.size(); ++r) {
    const Precision rung = ladder[r];
    const bool top = r + 1 == ladder.size();
    if (!top && rung_unit_roundoff(rung) > needed) continue;
    bool representable = true;
    const auto t_start = std::chrono::steady_clock::now();
    RungResult res = dispatch_precision(rung, [&]<class Real>() {
      const ScaledPolynomial<Real> poly(model, degree, scale);
      if (!poly.representable()) {
        representable = false;
        return RungResult{};
      }
      if (current.empty()) current = initial_points(poly.log_relative());
      // polish at the top rung, or at any rung that already certifies
      RungResult rr = run_rung(poly, current, top);
      if (rr.certified && !top) rr = run_rung(poly, rr.zeros, true);
      return rr;
    });
    if (!representable) continue;
    if (std::getenv("PSUMS_DEBUG_ROOTS")) {
      double worst = 0.0;
      int good = 0;
      for (std::size_t i = 0; i < res.evals.size(); ++i) {
        worst = std::max(worst, res.evals[i].radius);
        if (res.evals[i].radius <= kRadiusTolerance * std::max(1.0, std::abs(res.zeros[i]))) ++good;
      }
      std::fprintf(stderr, "roots: degree %d rung %s sweeps %d certified %d/%zu worst radius %g needed u %g (%.2fs)\n", degree,
                   to_string(rung).c_str(), res.sweeps, good, res.evals.size(), worst, res.needed_unit_roundoff,
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count());
    }
    current = res.zeros;
    cloud.sweeps += res.sweeps;
    if (res.certified) {
      cloud.precision_bits = nominal_bits(rung);
      std::vector<std::size_t> idx(res.zeros.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const Complex za = res.zeros[a], zb = res.zeros[b];
        return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
      });
      for (std::size_t i : idx) {
        cloud.zeros.push_back(res.zeros[i]);
        cloud.residuals.push_back(res.evals[i].backward);
        cloud.inclusion_radii.push_back(res.evals[i].radius);
      }
      return cloud;
    }
    needed = std::min(needed, res.needed_unit_roundoff);
    last_radius = 0.0;
    for (const auto& e : res.evals) last_radius = std::max(last_radius, e.radius);
  }
  std::ostringstream msg;
  msg << "zero_cloud: degree " << degree << " scale " << scale << " not certified at " << to_string(ceiling)
      << " (largest inclusion radius " << last_radius << ")";
  throw PrecisionExhausted(msg.str());
}

ZeroCloud zero_cloud(const EntireFunctionModel& model, int n, ZeroScaling scaling, Precision ceiling) {
  double scale = 1.0;
  if (scaling == ZeroScaling::ByN) scale = double(n);
  else if (scaling == ZeroScaling::ByRn) scale = scaling_radius(n, model.lambda());
  ZeroCloud cloud = section_zeros(model, n, scale, ceiling);
  cloud.scaling = scaling;
  return cloud;
}

double vieta_discrepancy(const EntireFunctionModel& model, const ZeroCloud& cloud) {
  const int n = cloud.n;
  const double log_s = std::log(cloud.scale);
  const Complex lead = model.log_coefficient<double>(n) + Complex(n * log_s, 0.0);
  const Complex constant = model.log_coefficient<double>(0);
  // a_n prod(-z_j) = a_0
  double re = lead.real() - constant.real(), im = lead.imag() - constant.imag();
  double re_c = 0.0;
  for (Complex z : cloud.zeros) {
    const Complex l = std::log(-z);
    const double y = l.real() - re_c;
    const double t = re + y;
    re_c = (t - re) - y;
    re = t;
    im += l.imag();
  }
  const Complex diff(re, std::remainder(im, 2.0 * kPi));
  return std::abs(std::exp(diff) - 1.0);
}

double conjugate_symmetry_error(const ZeroCloud& cloud) {
  double worst = 0.0;
  for (Complex z : cloud.zeros) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex w : cloud.zeros) best = std::min(best, std::abs(std::conj(z) - w));
    worst = std::max(worst, best / std::max(1.0, std::abs(z)));
  }
  return worst;
}

}  // namespace psums
