#include "psums/partial_sums.hpp"

#include "psums/saddle_geometry.hpp"
#include "psums/special_functions.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

namespace psums {

namespace {

// Models whose coefficient ratio is cheap enough to drive a term recurrence.
bool recurrence_friendly(const EntireFunctionModel& model) {
  switch (model.kind()) {
    case ModelKind::Exp:
    case ModelKind::Section5:
      return true;
    case ModelKind::MittagLeffler:
      return model.lambda() == 1.0;
    default:
      return false;
  }
}

// Sum of the first n+1 terms, rescaled against the running dominant term, with a
// Neumaier-compensated accumulator. Returns the value and a relative error estimate.
template <class Real>
std::pair<LogComplex, double> section_sum(const EntireFunctionModel& model, int n, Complex z_in) {
  using std::abs;
  using std::exp;
  using std::log;
  const Real u = unit_roundoff<Real>();
  const std::complex<Real> z = from_double<Real>(z_in);
  const bool z_zero = z_in == Complex(0.0, 0.0);
  const Real log_abs_z = z_zero ? Real(0) : Real(log(abs(z)));
  const Real arg_z = z_zero ? Real(0) : Real(atan2(z.imag(), z.real()));
  const bool recur = recurrence_friendly(model);

  Real scale = -std::numeric_limits<Real>::infinity();
  std::complex<Real> sum(0), comp(0);
  Real abs_weighted(0);
  std::complex<Real> log_term = model.log_coefficient<Real>(0);
  const double log_z_weight = to_double(abs(log_abs_z) + abs(arg_z));
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      if (z_zero) break;
      if (recur) {
        const std::complex<Real> r = model.log_coefficient_ratio<Real>(k - 1);
        log_term = std::complex<Real>(log_term.real() + r.real() + log_abs_z, log_term.imag() + r.imag() + arg_z);
      } else {
        const std::complex<Real> c = model.log_coefficient<Real>(k);
        log_term = std::complex<Real>(c.real() + Real(k) * log_abs_z, c.imag() + Real(k) * arg_z);
      }
    }
    if (isinf(log_term.real())) continue;
    if (log_term.real() > scale) {
      if (!isinf(scale)) {
        const Real shrink = exp(scale - log_term.real());
        sum *= shrink;
        comp *= shrink;
        abs_weighted *= shrink;
      }
      scale = log_term.real();
    }
    const Real magnitude = exp(log_term.real() - scale);
    const std::complex<Real> t(magnitude * cos(log_term.imag()), magnitude * sin(log_term.imag()));
    // Neumaier step, componentwise
    auto neumaier = [](Real& s, Real& c, const Real& x) {
      const Real tsum = s + x;
      if (abs(s) >= abs(x)) c += (s - tsum) + x;
      else c += (x - tsum) + s;
      s = tsum;
    };
    Real sr = sum.real(), si = sum.imag(), cr = comp.real(), ci = comp.imag();
    neumaier(sr, cr, t.real());
    neumaier(si, ci, t.imag());
    sum = std::complex<Real>(sr, si);
    comp = std::complex<Real>(cr, ci);
    // Phase and log-magnitude errors of a term grow with |log term| and, along the
    // recurrence, with the number of accumulated steps.
    const Real weight = Real(1) + abs(log_term.real()) + abs(log_term.imag()) +
                        Real(double(k) * (log_z_weight + std::log(double(k) + 2.0)));
    abs_weighted += magnitude * weight;
  }
  const std::complex<Real> total = sum + comp;
  const Real modulus = abs(total);
  if (isinf(scale)) return {LogComplex::zero(), 0.0};
  if (modulus == Real(0)) return {LogComplex::zero(), std::numeric_limits<double>::infinity()};
  const LogComplex value{to_double(scale + log(modulus)), to_double(atan2(total.imag(), total.real()))};
  return {value, to_double(Real(4) * u * abs_weighted / modulus)};
}

// sum_{k>n} c_k z^k with the same rescaling; stops once the geometric tail bound
// drops below the working precision.
template <class Real>
std::pair<LogComplex, double> tail_sum(const EntireFunctionModel& model, int n, Complex z_in) {
  using std::abs;
  using std::exp;
  using std::log;
  const Real u = unit_roundoff<Real>();
  if (z_in == Complex(0.0, 0.0)) return {LogComplex::zero(), 0.0};
  const std::complex<Real> z = from_double<Real>(z_in);
  const Real log_abs_z = log(abs(z));
  const Real arg_z = atan2(z.imag(), z.real());
  const long degree = model.max_degree();
  const long k_cap = degree >= 0 ? degree : long(n) + 200000;
  if (degree >= 0 && degree <= n) return {LogComplex::zero(), 0.0};
  auto log_term = [&](long k) {
    const std::complex<Real> c = model.log_coefficient<Real>(k);
    return std::complex<Real>(c.real() + Real(k) * log_abs_z, c.imag() + Real(k) * arg_z);
  };
  Real scale = -std::numeric_limits<Real>::infinity();
  std::complex<Real> sum(0);
  Real abs_weighted(0);
  bool finished = degree >= 0;
  std::complex<Real> next = log_term(n + 1);
  for (long k = n + 1; k <= k_cap; ++k) {
    const std::complex<Real> lt = next;
    if (k < k_cap) next = log_term(k + 1);
    if (isinf(lt.real())) continue;
    if (lt.real() > scale) {
      if (!isinf(scale)) {
        const Real shrink = exp(scale - lt.real());
        sum *= shrink;
        abs_weighted *= shrink;
      }
      scale = lt.real();
    }
    const Real magnitude = exp(lt.real() - scale);
    sum += std::complex<Real>(magnitude * cos(lt.imag()), magnitude * sin(lt.imag()));
    abs_weighted += magnitude * (Real(1) + abs(lt.real()) + abs(lt.imag()));
    if (degree < 0 && k > n + 2 && k < k_cap && !isinf(next.real())) {
      const Real rho = exp(next.real() - lt.real());
      if (rho < Real(0.9)) {
        const Real bound = exp(next.real() - scale) / (Real(1) - rho);
        if (bound <= Real(0.01) * u * abs(sum)) {
          finished = true;
          break;
        }
      }
    }
  }
  if (!finished) throw RangeExceeded("section tail: tail bound not reached");
  const Real modulus = abs(sum);
  if (modulus == Real(0)) return {LogComplex::zero(), std::numeric_limits<double>::infinity()};
  const LogComplex value{to_double(scale + log(modulus)), to_double(atan2(sum.imag(), sum.real()))};
  return {value, to_double(Real(4) * u * abs_weighted / modulus)};
}

void warn(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

}  // namespace

SectionValue section_value_certified(const EntireFunctionModel& model, int n, Complex z, Precision ceiling,
                                     double tolerance) {
  if (n < 0) throw DomainError("section_value: n must be >= 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("section_value: z must be finite");
  double last = 0.0;
  for (Precision rung : ladder_up_to(ceiling)) {
    const auto r = dispatch_precision(rung, [&]<class Real>() { return section_sum<Real>(model, n, z); });
    last = r.second;
    if (r.second <= tolerance) return {r.first, r.second, rung};
  }
  std::ostringstream msg;
  msg << "section_value: n=" << n << " z=" << z << " not certified at " << to_string(ceiling)
      << " (estimated relative error " << last << ")";
  throw PrecisionExhausted(msg.str());
}

SectionValue section_tail_certified(const EntireFunctionModel& model, int n, Complex z, Precision ceiling,
                                    double tolerance) {
  if (n < -1) throw DomainError("section_tail: n must be >= -1");
  double last = 0.0;
  for (Precision rung : ladder_up_to(ceiling)) {
    const auto r = dispatch_precision(rung, [&]<class Real>() { return tail_sum<Real>(model, n, z); });
    last = r.second;
    if (r.second <= tolerance) return {r.first, r.second, rung};
  }
  std::ostringstream msg;
  msg << "section_tail: n=" << n << " z=" << z << " not certified (estimated relative error " << last << ")";
  throw PrecisionExhausted(msg.str());
}

LogComplex section_value(const EntireFunctionModel& model, int n, Complex z, Precision ceiling) {
  return section_value_certified(model, n, z, ceiling).value;
}

ScalingWindow make_window(const EntireFunctionModel& model, int n, std::vector<Complex> w_grid) {
  if (n < 1) throw DomainError("scaling window: n must be positive");
  if (w_grid.empty()) throw DomainError("scaling window: w grid is empty");
  return {n, std::move(w_grid), scaling_radius(n, model.lambda())};
}

std::vector<RatioSample> ratio_on_window(const EntireFunctionModel& model, const ScalingWindow& window,
                                         Precision ceiling) {
  if (window.w_grid.empty()) throw DomainError("ratio_on_window: empty w grid");
  const double lambda = model.lambda();
  const double root_n = std::sqrt(double(window.n));
  const double target_scale = std::sqrt(lambda / 2.0);
  std::vector<RatioSample> out;
  out.reserve(window.w_grid.size());
  bool warned = false;
  for (Complex w : window.w_grid) {
    RatioSample s;
    s.n = window.n;
    s.w = w;
    s.outside_hypothesis = !(w.real() < 0.0);
    if (s.outside_hypothesis && !warned) {
      warn("ratio_on_window: Re w >= 0 lies outside the asserted limit region");
      warned = true;
    }
    const Complex z = window.r_n * (1.0 + w / root_n);
    const LogComplex f = model.log_evaluate(z);
    if (f.is_zero() || !std::isfinite(f.log_abs)) throw NumericError("ratio_on_window: f vanishes at a window point");
    const LogComplex p = section_value(model, window.n - 1, z, ceiling);
    s.ratio = ratio(p, f);
    s.target = 0.5 * erfc(w * target_scale);
    s.abs_error = std::abs(s.ratio - s.target);
    out.push_back(s);
  }
  return out;
}

RatioSample newman_rivlin_ratio(int n, Complex w, Precision ceiling) {
  if (n < 1) throw DomainError("newman_rivlin_ratio: n must be positive");
  if (w.imag() < 0.0) warn("newman_rivlin_ratio: Im w < 0 lies outside the asserted limit region");
  static const EntireFunctionModel exp_model = EntireFunctionModel::exp();
  const Complex z = double(n) + w * std::sqrt(double(n));
  RatioSample s;
  s.n = n;
  s.w = w;
  s.outside_hypothesis = w.imag() < 0.0;
  s.ratio = ratio(section_value(exp_model, n, z, ceiling), LogComplex::from_log(z));
  s.target = 0.5 * erfc(w / std::sqrt(2.0));
  s.abs_error = std::abs(s.ratio - s.target);
  return s;
}

RatioSample esv_ratio(double lambda, int n, Complex w, Precision ceiling) {
  if (!(lambda > 0.0)) throw DomainError("esv_ratio: lambda must be positive");
  if (n < 1) throw DomainError("esv_ratio: n must be positive");
  const EntireFunctionModel model = EntireFunctionModel::mittag_leffler(lambda);
  const double r = std::pow(double(n) / lambda, 1.0 / lambda) * std::exp(1.0 / (2.0 * n));
  const Complex u = 1.0 + w * std::sqrt(2.0 / (lambda * n));
  if (u == Complex(0.0, 0.0)) throw DomainError("esv_ratio: 1 + w sqrt(2/(lambda n)) vanishes");
  const LogComplex numer = section_value(model, n, r * u, ceiling);
  const LogComplex denom = LogComplex::from_log(double(n) * std::log(u)) * model.log_evaluate(r);
  RatioSample s;
  s.n = n;
  s.w = w;
  s.ratio = ratio(numer, denom);
  s.target = 0.5 * erfcx(w);
  s.abs_error = std::abs(s.ratio - s.target);
  return s;
}

std::vector<DiskCountRow> disk_count(const EntireFunctionModel& model, const std::vector<int>& n_grid,
                                     double epsilon, Precision ceiling) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw DomainError("disk_count: epsilon must lie in (0, 1/2)");
  std::vector<DiskCountRow> rows;
  for (int n : n_grid) {
    if (n < 2) throw DomainError("disk_count: n must be >= 2 (p_{n-1} needs a zero)");
    const double r_n = scaling_radius(n, model.lambda());
    const ZeroCloud cloud = section_zeros(model, n - 1, r_n, ceiling);
    DiskCountRow row;
    row.n = n;
    row.epsilon = epsilon;
    row.radius = std::pow(double(n), -0.5 + epsilon);
    for (Complex z : cloud.zeros)
      if (std::abs(z - 1.0) <= row.radius) ++row.count;
    rows.push_back(row);
  }
  return rows;
}

double parabola_slack(Complex z) {
  const double x = z.real(), y = z.imag();
  return std::max(y * y - 4.0 * (x + 1.0), -(x + 1.0));
}

bool inside_parabola(Complex z) {
  const double x = z.real(), y = z.imag();
  return y * y <= 4.0 * (x + 1.0) && x > -1.0;
}

ParabolaReport parabola_freeness(int n_max, Precision ceiling) {
  if (n_max < 1) throw DomainError("parabola_freeness: n_max must be >= 1");
  static const EntireFunctionModel exp_model = EntireFunctionModel::exp();
  ParabolaReport rep;
  rep.n_max = n_max;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_max; ++n) {
    const ZeroCloud cloud = zero_cloud(exp_model, n, ZeroScaling::None, ceiling);
    rep.max_vieta = std::max(rep.max_vieta, vieta_discrepancy(exp_model, cloud));
    rep.max_conjugate_error = std::max(rep.max_conjugate_error, conjugate_symmetry_error(cloud));
    double per_n = std::numeric_limits<double>::infinity();
    for (Complex z : cloud.zeros) {
      ++rep.zeros_checked;
      if (inside_parabola(z)) {
        ++rep.violations;
        std::ostringstream msg;
        msg << "parabola_freeness: zero " << z << " of p_" << n << " lies inside the parabola";
        throw NumericError(msg.str());
      }
      const double slack = parabola_slack(z);
      per_n = std::min(per_n, slack);
      if (slack == 0.0) {
        ++rep.boundary_contacts;
        continue;
      }
      if (slack < rep.min_slack) {
        rep.min_slack = slack;
        rep.argmin = z;
        rep.argmin_n = n;
      }
    }
    rep.min_slack_per_n.push_back(per_n);
  }
  return rep;
}

}  // namespace psums
