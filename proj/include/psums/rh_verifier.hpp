#pragma once

#include "psums/contour_quadrature.hpp"
#include "psums/function_models.hpp"
#include "psums/saddle_geometry.hpp"

#include <string>
#include <vector>

namespace psums {

/// log(c r_n^a (log r_n)^b), the normalization that strips the growth prefactor; c is the
/// constant in front of the asymptotic (lambda for Mittag-Leffler, 1 otherwise).
Complex log_prefactor_norm(const EntireFunctionModel& model, int n);

/// log of the F_n density r_n^{-a} (log r_n)^{-b} (e^{1/lambda} s)^{-n} f(r_n s).
Complex log_F_density(const EntireFunctionModel& model, int n, Complex s);

/// F_n(z): Cauchy integral of the F density over the whole contour.
CauchyIntegralResult F_n(const EntireFunctionModel& model, const Contour& contour, int n, Complex z, double tol);

/// (f - p_{n-1})(r_n z)/norm inside the contour, -p_{n-1}(r_n z)/norm outside,
/// with norm = r_n^a (log r_n)^b (e^{1/lambda} z)^n.
Complex F_n_closed_form(const EntireFunctionModel& model, const Contour& contour, int n, Complex z);

/// G_n(z): Cauchy integral of e^{n phi} over the sector part of the contour only.
CauchyIntegralResult G_n(const Contour& contour, double lambda, int n, Complex z, double tol);

struct PnValue {
  /// h(-i sqrt(n) psi^{-1}(z)).
  Complex chart_form;
  /// e^{n phi} erfc(-+ sqrt(n phi)) / 2 with the branch of the chart.
  Complex closed_form;
  /// z lies to the left of the descent arc.
  bool left = false;
};

/// Local parametrix near the saddle; DomainError outside the chart image or on the arc.
PnValue P_n(const SaddleChart& chart, int n, Complex z);

struct JumpCheck {
  std::string object;  // "F_n", "G_n" or "P_n"
  Complex z0;
  Complex computed;   // extrapolated jump
  Complex predicted;  // density at z0
  double residual = 0.0;
  double quadrature_error = 0.0;
  double extrapolation_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// One-sided values at offsets 1e-3 * 2^{-k}, k = 0..4, along the left normal,
/// Richardson-extrapolated to the contour. Five arc points per object.
std::vector<JumpCheck> jump_checks_F(const EntireFunctionModel& model, const Contour& contour, int n, double tol);
std::vector<JumpCheck> jump_checks_G(const Contour& contour, int n, double tol);
std::vector<JumpCheck> jump_checks_P(const Contour& contour, int n);

/// Richardson table on offsets halving each step: returns (R_44, |R_44 - R_43|).
std::pair<Complex, double> richardson_halving(const std::vector<Complex>& values);

enum class LemmaSuite { GOnGamma1, Gamma2Tail, FOnGamma1, POnGamma1 };
std::string to_string(LemmaSuite s);
LemmaSuite lemma_suite_from_string(const std::string& s);

struct DecayFit {
  std::string label;
  std::vector<int> n_values;
  std::vector<double> magnitudes;
  /// log-log slope for power laws, d log|.|/dn for log-linear fits.
  double fitted_slope = 0.0;
  double intercept = 0.0;
  /// RMS of the fit residuals over the RMS spread of the log magnitudes.
  double fit_residual = 0.0;
  bool log_linear = false;
  /// Quadrature error estimate per n.
  std::vector<double> errors;
  /// Sup of the inner object over Gamma_1 per n, for the suites that have one.
  std::vector<double> sup_norms;
  double sup_norm_slope = 0.0;
};

DecayFit fit_power_law(const std::vector<int>& n, const std::vector<double>& magnitudes);
DecayFit fit_log_linear(const std::vector<int>& n, const std::vector<double>& magnitudes);

/// Whether the sequence decreases except for at most `allowed_rises` steps.
bool monotone_trend(const std::vector<double>& values, int allowed_rises = 1);

struct SuiteSettings {
  double epsilon = 0.0;  // 0 selects default_epsilon
  double outer_tol = 1e-9;
  double inner_tol = 1e-11;
};

/// Magnitude of the named integral per n: Gamma_1 integrals of G_n, F_n, P_n against
/// ds/(s - z_probe), or the Gamma_2 tail of the F density.
DecayFit lemma_decay_suite(LemmaSuite which, const EntireFunctionModel& model, const Contour& contour,
                           const std::vector<int>& n_grid, Complex z_probe, const SuiteSettings& settings = {});

struct MDecomposition {
  int n = 0;
  Complex z;
  Complex p_term;     // -(1/2 pi i) int_{Gamma_1} P_n ds/(s-z)
  Complex g_term;     // +(1/2 pi i) int_{Gamma_1} G_n ds/(s-z)
  Complex f_term;     // -(1/2 pi i) int_{Gamma_1} F_n ds/(s-z)
  Complex tail_term;  // (1/2 pi i) int_{Gamma_2} F density ds/(s-z)
  Complex m;
  Complex g_minus_p;  // (G_n - P_n)(z)
  double discrepancy = 0.0;
  double error_estimate = 0.0;
  bool consistent = false;
};

MDecomposition m_decomposition(const EntireFunctionModel& model, const Contour& contour, int n, Complex z,
                               const SuiteSettings& settings = {});

/// |F_n - G_n| at 1 + w/sqrt(n), from the difference density integrated directly.
DecayFit fn_gn_agreement(const EntireFunctionModel& model, const Contour& contour, const std::vector<int>& n_grid,
                         Complex w, double tol = 1e-12);
/// The same difference as a single Cauchy integral (exposed for the refinement oracle).
CauchyIntegralResult fn_minus_gn(const EntireFunctionModel& model, const Contour& contour, int n, Complex z,
                                 double tol);
Complex fn_minus_gn_fixed(const EntireFunctionModel& model, const Contour& contour, int n, Complex z, int panels);

struct PipelineRow {
  int n = 0;
  Complex w;
  Complex F;          // F_n(1 + w/sqrt n) by quadrature
  Complex composite;  // e^{lambda w^2/2} - e^{lambda w^2/2} erfc(w sqrt(lambda/2))/2
  double f_discrepancy = 0.0;
  Complex ratio_from_F;  // 1 - F_n norm / f at the window point
  Complex target;        // erfc(w sqrt(lambda/2))/2
  double ratio_error = 0.0;
  /// ratio_on_window's abs_error at the same point, and |ratio_error - that|.
  double window_abs_error = 0.0;
  double path_agreement = 0.0;
};

std::vector<PipelineRow> theorem1_pipeline(const EntireFunctionModel& model, const Contour& contour, int n,
                                           const std::vector<Complex>& w_grid, double tol = 1e-12);

struct ClosedFormRow {
  int n = 0;
  Complex z;
  bool inside = false;
  Complex quadrature;
  Complex closed_form;
  double relative_error = 0.0;
};

/// Ten probe points strictly inside the contour.
std::vector<Complex> interior_probes(const Contour& contour);

std::vector<ClosedFormRow> fn_explicit_check(const EntireFunctionModel& model, const Contour& contour,
                                             const std::vector<int>& n_values, const std::vector<Complex>& probes,
                                             double tol = 1e-12);

/// |G_n(z) on contour(margin_a) - G_n(z) on contour(margin_b)| with the summed error estimate.
std::pair<double, double> deformation_invariance(double lambda, double theta, double margin_a, double margin_b, int n,
                                                 Complex z, double tol = 1e-12);

/// Contour for a model: sector half-angle from its profile, given level margin.
Contour model_contour(const EntireFunctionModel& model, double margin = 0.05);

}  // namespace psums
