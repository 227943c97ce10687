#pragma once

#include "psums/function_models.hpp"
#include "psums/precision.hpp"
#include "psums/types.hpp"

#include <vector>

namespace psums {

struct SectionValue {
  LogComplex value;
  /// Rounding-error estimate relative to |p_n(z)|.
  double relative_error = 0.0;
  Precision precision = Precision::Double;
};

/// p_n(z) = sum_{k<=n} c_k z^k in log form, escalating precision until the
/// rounding estimate certifies `tolerance`. Throws PrecisionExhausted otherwise.
SectionValue section_value_certified(const EntireFunctionModel& model, int n, Complex z,
                                     Precision ceiling = Precision::Bits512,
                                     double tolerance = 1e-10);
LogComplex section_value(const EntireFunctionModel& model, int n, Complex z,
                         Precision ceiling = Precision::Bits512);

/// f(z) - p_n(z) = sum_{k>n} c_k z^k summed directly (no cancellation against f),
/// certified like section_value.
SectionValue section_tail_certified(const EntireFunctionModel& model, int n, Complex z,
                                    Precision ceiling = Precision::Bits512, double tolerance = 1e-10);

struct ScalingWindow {
  int n = 0;
  std::vector<Complex> w_grid;
  double r_n = 0.0;
};

ScalingWindow make_window(const EntireFunctionModel& model, int n, std::vector<Complex> w_grid);

struct RatioSample {
  int n = 0;
  Complex w;
  Complex ratio;
  Complex target;
  double abs_error = 0.0;
  /// w lies outside the region where the limit is asserted.
  bool outside_hypothesis = false;
};

/// p_{n-1}(r_n(1 + w/sqrt n)) / f(r_n(1 + w/sqrt n)) against erfc(w sqrt(lambda/2))/2.
std::vector<RatioSample> ratio_on_window(const EntireFunctionModel& model, const ScalingWindow& window,
                                         Precision ceiling = Precision::Bits512);

/// p_n(n + w sqrt n) / exp(n + w sqrt n) for the exponential series, against erfc(w/sqrt 2)/2.
RatioSample newman_rivlin_ratio(int n, Complex w, Precision ceiling = Precision::Bits512);

/// p_n(r u) / (u^n E_{1/lambda}(r)) with r = (n/lambda)^{1/lambda} e^{1/(2n)} and
/// u = 1 + w sqrt(2/(lambda n)), against e^{w^2} erfc(w)/2.
RatioSample esv_ratio(double lambda, int n, Complex w, Precision ceiling = Precision::Bits512);

enum class ZeroScaling { ByN, ByRn, None };
std::string to_string(ZeroScaling s);
ZeroScaling zero_scaling_from_string(const std::string& s);

struct ZeroCloud {
  int n = 0;
  ZeroScaling scaling = ZeroScaling::None;
  /// Zeros are those of p_n(scale * z).
  double scale = 1.0;
  std::vector<Complex> zeros;
  /// Backward residual |q(z)| / sum |a_k| |z|^k at each zero.
  std::vector<double> residuals;
  /// Radius of a disk about each zero certified to contain exactly one root.
  std::vector<double> inclusion_radii;
  int precision_bits = 53;
  int sweeps = 0;
};

/// All zeros of the scaled section: by_n p_n(n z), by_r_n p_n(r_n z), none p_n(z).
ZeroCloud zero_cloud(const EntireFunctionModel& model, int n, ZeroScaling scaling,
                     Precision ceiling = Precision::Bits512);

/// Zeros of p_degree(scale z) by Aberth-Ehrlich iteration on the pre-scaled coefficient list.
ZeroCloud section_zeros(const EntireFunctionModel& model, int degree, double scale,
                        Precision ceiling = Precision::Bits512);

/// |a_n prod(-z_j) / a_0 - 1|, assembled in log space.
double vieta_discrepancy(const EntireFunctionModel& model, const ZeroCloud& cloud);
/// max over zeros of the distance to the nearest conjugate, relative to max(1, |z|).
double conjugate_symmetry_error(const ZeroCloud& cloud);

struct DiskCountRow {
  int n = 0;
  double epsilon = 0.0;
  /// Window radius n^{-1/2 + epsilon} in the scaled variable.
  double radius = 0.0;
  int count = 0;
};

/// Zeros of p_{n-1} in |z - r_n| <= r_n n^{-1/2+eps}, counted in the scaled variable.
std::vector<DiskCountRow> disk_count(const EntireFunctionModel& model, const std::vector<int>& n_grid,
                                     double epsilon, Precision ceiling = Precision::Bits512);

/// max(y^2 - 4(x+1), -(x+1)); negative exactly inside {y^2 <= 4(x+1), x > -1}
/// (up to the boundary y^2 = 4(x+1), x > -1, which has slack 0 and counts as inside).
double parabola_slack(Complex z);
bool inside_parabola(Complex z);

struct ParabolaReport {
  int n_max = 0;
  int zeros_checked = 0;
  int violations = 0;
  /// Zeros with slack exactly 0 outside the region (the point -1).
  int boundary_contacts = 0;
  /// Minimum slack over zeros that are not boundary contacts.
  double min_slack = 0.0;
  Complex argmin;
  int argmin_n = 0;
  std::vector<double> min_slack_per_n;
  double max_vieta = 0.0;
  double max_conjugate_error = 0.0;
};

ParabolaReport parabola_freeness(int n_max, Precision ceiling = Precision::Bits512);

}  // namespace psums
