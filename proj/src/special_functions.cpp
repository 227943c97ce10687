#include "psums/special_functions.hpp"

#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace psums {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kSqrtPi = 1.77245385090551602730;

using LongComplex = std::complex<long double>;

// erf(z) = 2/sqrt(pi) * sum (-1)^n z^{2n+1} / (n! (2n+1)); terms peak near n = |z|^2.
Complex erf_maclaurin(Complex z) {
  const LongComplex zz(z.real(), z.imag());
  const LongComplex z2 = zz * zz;
  const long double peak = std::norm(z);
  LongComplex term = zz;
  LongComplex sum = zz;
  for (int n = 1; n < 4000; ++n) {
    term *= -z2 / static_cast<long double>(n);
    const LongComplex add = term / static_cast<long double>(2 * n + 1);
    sum += add;
    if (n > peak && std::abs(add) <= 1e-21L * std::abs(sum)) break;
  }
  sum *= 2.0L * static_cast<long double>(kInvSqrtPi);
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Modified Lentz evaluation of sqrt(pi) e^{z^2} erfc(z) = 1 / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
// valid for Re z > 0.
Complex erfcx_continued_fraction(Complex z) {
  constexpr double tiny = 1e-300;
  Complex f = z;
  if (std::abs(f) < tiny) f = tiny;
  Complex c = f;
  Complex d = 0.0;
  for (int k = 1; k < 20000; ++k) {
    const double a = 0.5 * k;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 2e-16) break;
  }
  return kInvSqrtPi / f;
}

// Series is used when the worst-case relative loss |z|^2 e^{2x^2} u_long stays below ~1e-15.
bool use_maclaurin(Complex z) {
  const double x = z.real();
  const double r2 = std::norm(z);
  if (r2 >= 225.0) return false;
  return r2 * std::exp(2.0 * x * x) <= 1e4;
}

// Right half-plane (Re z >= 0) evaluation returning both erfc and erfcx.
struct RightHalf {
  Complex erfc;
  Complex erfcx;
};

RightHalf erfc_right_half(Complex z) {
  if (use_maclaurin(z)) {
    const Complex value = 1.0 - erf_maclaurin(z);
    return {value, std::exp(z * z) * value};
  }
  const Complex scaled = erfcx_continued_fraction(z);
  return {std::exp(-z * z) * scaled, scaled};
}

Complex log_gamma_stirling(Complex z) {
  static constexpr std::array<double, 10> kCoeff = {
      1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,  -1.0 / 1680.0,
      1.0 / 1188.0,        -691.0 / 360360.0,  1.0 / 156.0,   -3617.0 / 122400.0,
      43867.0 / 244188.0,  -174611.0 / 125400.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kCoeff) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

// log Gamma(1 + t) = -gamma t + sum_{k>=2} zeta(k) (-t)^k / k, |t| < 0.2.
Complex log_gamma_taylor_at_one(Complex t) {
  static const std::array<double, 40> zeta_values = [] {
    std::array<double, 40> v{};
    for (int k = 2; k < 40; ++k) v[k] = boost::math::zeta(static_cast<double>(k));
    return v;
  }();
  constexpr double euler_gamma = 0.57721566490153286061;
  Complex sum = -euler_gamma * t;
  Complex power = t;
  for (int k = 2; k < 40; ++k) {
    power *= -t;
    const Complex add = zeta_values[k] * power / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

Complex log1p_complex(Complex t) {
  if (std::abs(t) < 0.25) {
    // log(1+t) = 2 atanh(s), s = t/(2+t), |s| <= 1/7
    const Complex s = t / (2.0 + t);
    const Complex s2 = s * s;
    Complex term = s;
    Complex sum = s;
    for (int k = 3; k < 80; k += 2) {
      term *= s2;
      const Complex add = term / static_cast<double>(k);
      sum += add;
      if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
    }
    return 2.0 * sum;
  }
  return std::log(1.0 + t);
}

Complex erfc(Complex z) {
  if (z == Complex(0.0, 0.0)) return 1.0;
  if (z.real() >= 0.0) return erfc_right_half(z).erfc;
  const Complex reflected = erfc_right_half(-z).erfc;
#ifdef PSUMS_FAULT_INJECT_ERFC
  return 2.0 - reflected + 1e-6;
#else
  return 2.0 - reflected;
#endif
}

Complex erfcx(Complex z) {
  if (z.real() >= 0.0) return erfc_right_half(z).erfcx;
  return 2.0 * std::exp(z * z) - erfc_right_half(-z).erfcx;
}

int argument_principle_count(const std::function<Complex(Complex)>& f, Complex center,
                             double radius, int min_samples) {
  int samples = std::max(min_samples, 16);
  for (int attempt = 0; attempt < 10; ++attempt, samples *= 2) {
    double total = 0.0;
    bool resolved = true;
    Complex prev = f(center + radius);
    if (prev == Complex(0.0, 0.0)) throw NumericError("argument principle: zero on the circle");
    for (int j = 1; j <= samples; ++j) {
      const double t = 2.0 * kPi * j / samples;
      const Complex cur = f(center + std::polar(radius, t));
      if (cur == Complex(0.0, 0.0)) throw NumericError("argument principle: zero on the circle");
      const double step = std::arg(cur / prev);
      if (std::abs(step) > kPi / 3.0) {
        resolved = false;
        break;
      }
      total += step;
      prev = cur;
    }
    if (resolved) return static_cast<int>(std::lround(total / (2.0 * kPi)));
  }
  throw NumericError("argument principle: phase not resolved");
}

ErfcZeroList erfc_zeros(int count) {
  if (count < 1) throw DomainError("erfc_zeros: count must be >= 1");
  ErfcZeroList out;
  std::vector<Complex> upper;
  for (int k = 1; k <= count; ++k) {
    // erfc(z) = 0 with u = -z, Re u > 0:  u^2 = -2 pi i k - log(2 sqrt(pi) u).
    Complex u = std::sqrt(Complex(0.0, -2.0 * kPi * k));
    for (int it = 0; it < 60; ++it) {
      u = std::sqrt(Complex(0.0, -2.0 * kPi * k) - std::log(2.0 * kSqrtPi * u));
    }
    Complex z = -u;
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      const Complex deriv = -2.0 * kInvSqrtPi * std::exp(-z * z);
      const Complex step = erfc(z) / deriv;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::abs(z)) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "erfc_zeros: Newton did not converge for zero " << k;
      throw NumericError(msg.str());
    }
    upper.push_back(z);
  }
  std::sort(upper.begin(), upper.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const Complex z = upper[i];
    double gap = 1.0;
    for (std::size_t j = 0; j < upper.size(); ++j) {
      if (j != i) gap = std::min(gap, std::abs(upper[j] - z));
    }
    const double radius = 0.25 * gap;
    const int winding = argument_principle_count([](Complex s) { return erfc(s); }, z, radius);
    if (winding != 1) {
      std::ostringstream msg;
      msg << "erfc_zeros: argument principle certification failed near " << z.real() << "+"
          << z.imag() << "i (winding " << winding << ")";
      throw NumericError(msg.str());
    }
    for (Complex member : {z, std::conj(z)}) {
      out.zeros.push_back(member);
      out.residuals.push_back(std::abs(erfc(member)));
      out.winding_numbers.push_back(winding);
    }
  }
  return out;
}

Complex gaussian_cauchy_h(Complex zeta) {
  if (zeta.imag() == 0.0) throw DomainError("gaussian_cauchy_h: zeta on the real axis");
  if (zeta.imag() > 0.0) return 0.5 * erfcx(-kI * zeta);
  // The density is real, so h(conj zeta) = -conj(h(zeta)).
  return -std::conj(0.5 * erfcx(-kI * std::conj(zeta)));
}

Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw DomainError("log_gamma: pole at a nonpositive integer");
  }
  if (z == Complex(1.0, 0.0) || z == Complex(2.0, 0.0)) return 0.0;
  if (std::abs(z - 1.0) < 0.2) return log_gamma_taylor_at_one(z - 1.0);
  if (std::abs(z - 2.0) < 0.2) return log1p_complex(z - 2.0) + log_gamma_taylor_at_one(z - 2.0);
  if (z.real() >= 7.0 || (z.real() >= 0.0 && std::abs(z.imag()) >= 7.0)) {
    return log_gamma_stirling(z);
  }
  // Shift right; summing principal logs of the individual factors keeps the
  // branch continuous off the negative real axis.
  const int shift = static_cast<int>(std::ceil(7.0 - z.real()));
  Complex correction = 0.0;
  for (int j = 0; j < shift; ++j) correction += std::log(z + static_cast<double>(j));
  return log_gamma_stirling(z + static_cast<double>(shift)) - correction;
}

namespace {

template <class Real>
struct MittagLefflerSum {
  LogComplex value;
  double relative_error = 0.0;
};

template <class Real>
MittagLefflerSum<Real> mittag_leffler_series(Complex z_in, double lambda_in) {
  using std::abs;
  using std::exp;
  using std::log;
  const Real lambda(lambda_in);
  const std::complex<Real> z = from_double<Real>(z_in);
  const Real log_abs_z = log(abs(z));
  const Real arg_z = atan2(z.imag(), z.real());
  const Real u = unit_roundoff<Real>();

  auto log_term = [&](long k) {
    return Real(k) * log_abs_z - log_gamma_real<Real>(Real(k) / lambda + Real(1));
  };

  // Terms peak near k/lambda + 1 = |z|^lambda.
  const double abs_z = std::abs(z_in);
  const double k_peak = std::max(0.0, lambda_in * (std::pow(abs_z, lambda_in) - 0.5));
  const long k_lo = std::max(0L, static_cast<long>(k_peak) - 3);
  Real scale = log_term(0);
  for (long k = k_lo; k <= static_cast<long>(k_peak) + 3; ++k) scale = std::max(scale, log_term(k));

  const long k_limit = static_cast<long>(4.0 * k_peak) + 20000;
  std::complex<Real> sum(0), compensation(0);
  Real abs_weighted(0);
  Real tail(0);
  bool tail_ok = false;
  Real next_log = log_term(0);
  for (long k = 0; k < k_limit; ++k) {
    const Real lt = next_log;
    next_log = log_term(k + 1);
    const Real magnitude = exp(lt - scale);
    const Real phase = Real(k) * arg_z;
    const std::complex<Real> term(magnitude * cos(phase), magnitude * sin(phase));
    // Neumaier-compensated complex sum.
    const std::complex<Real> t = sum + term;
    const Real re_c = abs(sum.real()) >= abs(term.real()) ? (sum.real() - t.real()) + term.real()
                                                          : (term.real() - t.real()) + sum.real();
    const Real im_c = abs(sum.imag()) >= abs(term.imag()) ? (sum.imag() - t.imag()) + term.imag()
                                                          : (term.imag() - t.imag()) + sum.imag();
    compensation += std::complex<Real>(re_c, im_c);
    sum = t;
    abs_weighted += magnitude * (Real(1) + abs(Real(k) * log_abs_z) + abs(lt + scale));
    if (static_cast<double>(k) > k_peak) {
      const Real rho = exp(next_log - lt);
      if (rho < Real(1)) {
        const Real bound = exp(next_log - scale) / (Real(1) - rho);
        if (bound <= Real(0.01) * u * abs(sum + compensation)) {
          tail = bound;
          tail_ok = true;
          break;
        }
      }
    }
  }
  if (!tail_ok) throw RangeExceeded("mittag_leffler: series tail bound not reached");
  sum += compensation;
  const Real modulus = abs(sum);
  MittagLefflerSum<Real> out;
  if (modulus == Real(0)) {
    out.value = LogComplex::zero();
    out.relative_error = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = {to_double(scale + log(modulus)), to_double(atan2(sum.imag(), sum.real()))};
  out.relative_error = to_double((Real(4) * u * abs_weighted + tail) / modulus);
  return out;
}

}  // namespace

LogComplex mittag_leffler_log(Complex z, double lambda, Precision ceiling) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("mittag_leffler: lambda must be positive");
  if (z == Complex(0.0, 0.0)) return LogComplex::from_value(1.0);
  double last_error = std::numeric_limits<double>::infinity();
  for (Precision rung : ladder_up_to(ceiling)) {
    const auto result = dispatch_precision(rung, [&]<class Real>() {
      const auto r = mittag_leffler_series<Real>(z, lambda);
      return std::pair<LogComplex, double>(r.value, r.relative_error);
    });
    last_error = result.second;
    if (result.second <= 1e-13) return result.first;
  }
  std::ostringstream msg;
  msg << "mittag_leffler: accuracy not certified at " << to_string(ceiling)
      << " (estimated relative error " << last_error << ")";
  throw RangeExceeded(msg.str());
}

Complex mittag_leffler(Complex z, double lambda, Precision ceiling) {
  const LogComplex v = mittag_leffler_log(z, lambda, ceiling);
  if (v.log_abs > 700.0) throw RangeExceeded("mittag_leffler: value overflows double");
  return v.value();
}

}  // namespace psums
