#pragma once

#include "psums/precision.hpp"
#include "psums/types.hpp"

#include <functional>
#include <vector>

namespace psums {

/// Complementary error function (2/sqrt(pi)) * integral of e^{-s^2} from z to z + infinity.
///
/// Maclaurin series of erf (extended-precision accumulation) where cancellation is
/// mild, Laplace continued fraction for the scaled complement otherwise, and the
/// reflection erfc(-z) = 2 - erfc(z) on the left half-plane.
Complex erfc(Complex z);

/// Scaled complement e^{z^2} erfc(z); bounded on Re z >= 0.
Complex erfcx(Complex z);

struct ErfcZeroList {
  /// Conjugate pairs ordered by modulus, upper-half-plane member first.
  std::vector<Complex> zeros;
  /// |erfc| at each zero.
  std::vector<double> residuals;
  /// Argument-principle winding count around each zero (1 when certified).
  std::vector<int> winding_numbers;
};

/// The `count` smallest zero pairs of erfc, each Newton-refined from the
/// asymptotic string of zeros and certified by a winding count of exactly 1.
ErfcZeroList erfc_zeros(int count);

/// Number of zeros of `f` inside the circle |z - center| = radius, by the
/// argument principle with adaptive sampling of the phase.
int argument_principle_count(const std::function<Complex(Complex)>& f, Complex center,
                             double radius, int min_samples = 256);

/// h(zeta) = (1/2 pi i) * integral over the real line of e^{-u^2} du / (u - zeta).
/// Throws DomainError on the real axis, where h jumps by e^{-x^2}.
Complex gaussian_cauchy_h(Complex zeta);

/// E_{1/lambda}(z) = sum z^k / Gamma(k/lambda + 1), by direct series summation with a
/// term-ratio tail bound. Escalates along the precision ladder up to `ceiling`
/// and throws RangeExceeded when no rung certifies 1e-13 relative accuracy.
Complex mittag_leffler(Complex z, double lambda, Precision ceiling = Precision::Bits512);

/// Same series, returned in log form so that large arguments do not overflow.
LogComplex mittag_leffler_log(Complex z, double lambda, Precision ceiling = Precision::Bits512);

/// log(1 + t), accurate for small |t|.
Complex log1p_complex(Complex t);

/// Log-gamma on the branch continuous from the positive real axis, cut along
/// the negative real axis. Throws DomainError at the poles 0, -1, -2, ...
Complex log_gamma(Complex z);

}  // namespace psums
