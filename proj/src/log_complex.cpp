#include "psums/types.hpp"

#include <cmath>

namespace psums {

LogComplex LogComplex::from_value(Complex z) {
  if (z == Complex(0.0, 0.0)) return zero();
  return {std::log(std::abs(z)), std::arg(z)};
}

LogComplex LogComplex::from_log(Complex log_z) {
  return {log_z.real(), wrap_angle(log_z.imag())};
}

Complex LogComplex::value() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_abs), arg);
}

LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() || b.is_zero()) return LogComplex::zero();
  return {a.log_abs + b.log_abs, wrap_angle(a.arg + b.arg)};
}

LogComplex operator/(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) throw NumericError("LogComplex division by zero");
  if (a.is_zero()) return LogComplex::zero();
  return {a.log_abs - b.log_abs, wrap_angle(a.arg - b.arg)};
}

LogComplex add(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogComplex& big = a.log_abs >= b.log_abs ? a : b;
  const LogComplex& small = a.log_abs >= b.log_abs ? b : a;
  const Complex rel = std::polar(std::exp(small.log_abs - big.log_abs), small.arg - big.arg);
  const Complex s = Complex(1.0, 0.0) + rel;
  if (s == Complex(0.0, 0.0)) return LogComplex::zero();
  return {big.log_abs + std::log(std::abs(s)), wrap_angle(big.arg + std::arg(s))};
}

Complex ratio(const LogComplex& a, const LogComplex& b) { return (a / b).value(); }

double wrap_angle(double t) {
  if (t > -kPi && t <= kPi) return t;
  double r = std::remainder(t, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace psums
