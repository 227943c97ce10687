#pragma once

#include "psums/saddle_geometry.hpp"
#include "psums/types.hpp"

#include <functional>
#include <vector>

namespace psums {

struct QuadratureResult {
  Complex value;
  double error = 0.0;
  /// Integral of |f|, the scale against which relative tolerances are measured.
  double l1 = 0.0;
  long nodes = 0;
  bool converged = false;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]: the panel with the largest
/// error estimate is bisected until error <= max(abs_tol, rel_tol * l1) or the node
/// budget runs out. `breaks` are interior points where panels must start.
QuadratureResult adaptive_gauss_kronrod(const std::function<Complex(double)>& f, double a, double b,
                                        double rel_tol, double abs_tol = 0.0, long max_nodes = 400000,
                                        const std::vector<double>& breaks = {});

/// Composite 20-point Gauss-Legendre on `panels` equal panels (refinement oracle).
Complex fixed_gauss_legendre(const std::function<Complex(double)>& f, double a, double b, int panels);

struct CauchyIntegralResult {
  Complex value;
  double error = 0.0;
  long nodes = 0;
};

/// Density on the contour in log form: returns log rho(s); real part -inf for rho = 0.
using LogDensity = std::function<Complex(Complex)>;
/// Density as an ordinary complex value.
using Density = std::function<Complex(Complex)>;

/// (1/2 pi i) sum over segments of the integral of rho(s) ds/(s - z).
///
/// On each segment the density is recombined as exp(log rho - M) with M the largest
/// sampled log-magnitude, so factors like e^{n phi} never leave double range. The
/// error estimate satisfies error <= tol * (integral of |rho ds/(s-z)|) on success;
/// NumericError otherwise. z closer than 1e-12 to a segment raises DomainError.
CauchyIntegralResult cauchy_integral_log(const std::vector<ContourSegment>& segments, const LogDensity& log_rho,
                                         Complex z, double tol);
CauchyIntegralResult cauchy_integral(const std::vector<ContourSegment>& segments, const Density& rho, Complex z,
                                     double tol);

/// Same integral with composite Gauss-Legendre at a fixed panel count per segment.
Complex cauchy_integral_fixed(const std::vector<ContourSegment>& segments, const LogDensity& log_rho, Complex z,
                              int panels_per_segment);

/// Parameter of the point on `segment` closest to z, with its distance.
std::pair<double, double> nearest_parameter(const ContourSegment& segment, Complex z);

/// Split the parameter range of a segment at `t` into two segments.
std::pair<ContourSegment, ContourSegment> split_segment(const ContourSegment& segment, double t);

}  // namespace psums
