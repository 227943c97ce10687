#pragma once

#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace psums {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Precondition violated by the caller (bad argument, point on a branch cut, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation ran but could not meet its accuracy contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The top rung of the precision ladder failed to certify a result.
class PrecisionExhausted : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A series evaluation left its reliable range at the allowed precision.
class RangeExceeded : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Complex number stored as (log modulus, phase).
///
/// Section values near the scaling radius reach e^{n/lambda}; products and
/// ratios of such numbers are formed here without leaving double range.
struct LogComplex {
  double log_abs = -std::numeric_limits<double>::infinity();
  double arg = 0.0;

  static LogComplex zero() { return {}; }
  static LogComplex from_value(Complex z);
  /// From a complex logarithm log|z| + i arg z (any branch).
  static LogComplex from_log(Complex log_z);

  bool is_zero() const { return log_abs == -std::numeric_limits<double>::infinity(); }
  Complex log() const { return {log_abs, arg}; }
  /// exp(log()); overflows to inf when log_abs exceeds ~709.
  Complex value() const;
};

LogComplex operator*(const LogComplex& a, const LogComplex& b);
LogComplex operator/(const LogComplex& a, const LogComplex& b);
/// a + b without overflow.
LogComplex add(const LogComplex& a, const LogComplex& b);
/// a / b as an ordinary complex number (the quotient must be representable).
Complex ratio(const LogComplex& a, const LogComplex& b);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double t);

}  // namespace psums
