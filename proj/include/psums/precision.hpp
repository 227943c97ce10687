#pragma once

// Precision ladder: double -> quad (113-bit) -> 256-bit -> 512-bit binary floats.
// Templated numerics are written once against a `Real` and instantiated per rung.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

namespace psums {

using Quad = boost::multiprecision::float128;
using Float256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using Float512 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<512, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

enum class Precision : int { Double = 53, Quad = 113, Bits256 = 256, Bits512 = 512 };

/// Configuration values are the nominal mantissa sizes {53, 106, 256, 512};
/// 106 selects the quad rung.
Precision precision_from_bits(int bits);
int nominal_bits(Precision p);
std::string to_string(Precision p);

/// Rungs from double up to and including `ceiling`.
std::vector<Precision> ladder_up_to(Precision ceiling);

template <class Real>
inline Real unit_roundoff() {
  return std::numeric_limits<Real>::epsilon() / 2;
}

template <class Real>
inline double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <class Real>
inline std::complex<double> to_double(const std::complex<Real>& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class Real>
inline std::complex<Real> from_double(std::complex<double> z) {
  return {Real(z.real()), Real(z.imag())};
}

template <class Real>
inline Real log_gamma_real(const Real& x) {
  if constexpr (std::is_same_v<Real, double>) {
    return std::lgamma(x);
  } else {
    return boost::math::lgamma(x);
  }
}

template <class Real>
inline Real pi_v() {
  if constexpr (std::is_same_v<Real, double>) {
    return std::numbers::pi;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

/// Invoke `fn.template operator()<Real>()` with the real type of rung `p`.
template <class Fn>
decltype(auto) dispatch_precision(Precision p, Fn&& fn) {
  switch (p) {
    case Precision::Double:
      return fn.template operator()<double>();
    case Precision::Quad:
      return fn.template operator()<Quad>();
    case Precision::Bits256:
      return fn.template operator()<Float256>();
    case Precision::Bits512:
    default:
      return fn.template operator()<Float512>();
  }
}

}  // namespace psums
