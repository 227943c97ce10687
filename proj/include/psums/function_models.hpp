#pragma once

#include "psums/precision.hpp"
#include "psums/types.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace psums {

/// f(z) ~ z^a (log z)^b exp(z^lambda) for |arg z| <= theta, O(exp(mu |z|^lambda)) elsewhere.
struct GrowthProfile {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double lambda = 1.0;
  double theta = kPi / 3.0;
  double mu = 0.5;
};

/// Throws DomainError unless 0 < lambda, 0 < theta < min(pi, pi/lambda), mu < 1.
void validate_profile(const GrowthProfile& profile);

enum class ModelKind { Exp, MittagLeffler, Section5, Custom };

struct DeviationSample {
  Complex z;
  Complex delta;
  double modulus = 0.0;
};

class EntireFunctionModel {
 public:
  static EntireFunctionModel exp();
  static EntireFunctionModel mittag_leffler(double lambda);
  /// (e^z - e^{-z}(1+2z))/z^2; grows in two opposite directions.
  static EntireFunctionModel section5_example();
  /// Coefficient table c_0..c_N; evaluation is the truncated series.
  static EntireFunctionModel custom(std::string name, GrowthProfile profile,
                                    std::vector<Complex> coefficients);

  const std::string& name() const { return name_; }
  ModelKind kind() const { return kind_; }
  const GrowthProfile& profile() const { return profile_; }
  double lambda() const { return profile_.lambda; }
  /// Set for models that do not satisfy the single-direction growth hypothesis.
  bool violates_growth_model() const { return kind_ == ModelKind::Section5; }
  bool real_coefficients() const;
  /// Highest nonzero coefficient index, or -1 for transcendental models.
  long max_degree() const;

  Complex coefficient(long k) const;
  /// log(c_{k+1}/c_k); DomainError when either coefficient vanishes.
  Complex coefficient_log_ratio(long k) const;

  /// log c_k (real part log|c_k|, imaginary part its phase) in working precision `Real`;
  /// real part is -inf for vanishing coefficients.
  template <class Real>
  std::complex<Real> log_coefficient(long k) const;
  /// log(c_{k+1}/c_k) in working precision `Real`.
  template <class Real>
  std::complex<Real> log_coefficient_ratio(long k) const;

  /// f(z) in log form.
  LogComplex log_evaluate(Complex z) const;
  Complex evaluate(Complex z) const;
  Complex derivative(Complex z) const;
  /// f'(z)/f(z).
  Complex log_derivative(Complex z) const;

  /// Prefactor folded into the deviation (lambda for Mittag-Leffler, 1 otherwise).
  double deviation_prefactor() const;

 private:
  EntireFunctionModel(std::string name, ModelKind kind, GrowthProfile profile)
      : name_(std::move(name)), kind_(kind), profile_(profile) {}

  LogComplex log_series(Complex z, bool derivative) const;

  std::string name_;
  ModelKind kind_;
  GrowthProfile profile_;
  std::vector<Complex> table_;
};

/// "exp", "mittag_leffler" / "ml" (requires lambda), "section5_example" / "section5".
/// The form "mittag_leffler(2)" is also accepted.
EntireFunctionModel builtin_model(const std::string& name, double lambda = std::nan(""));

/// Relative deviation from the leading growth form, in log space.
DeviationSample deviation(const EntireFunctionModel& model, Complex z);

/// (1 + log t / log r)^b (1 + delta(r t)) - 1.
Complex deviation_tilde(const EntireFunctionModel& model, double r, Complex t);

struct DerivativeGrowthRow {
  int n = 0;
  /// max over the z grid of |f'(r_n z)/f(r_n z)| e^{-nu n}
  double scaled_max = 0.0;
  Complex argmax;
};

struct DerivativeGrowthReport {
  double nu = 0.0;
  std::vector<DerivativeGrowthRow> rows;
  bool bounded = false;
};

/// Numerical evidence for f'(r_n z)/f(r_n z) = O(e^{nu n}). `nu_limit`, when finite,
/// is -Re phi(sigma_1) and nu must lie below it.
DerivativeGrowthReport check_derivative_growth(const EntireFunctionModel& model,
                                               const std::vector<int>& n_grid,
                                               const std::vector<Complex>& z_grid, double nu,
                                               double nu_limit = std::nan(""));

// ---------------------------------------------------------------------------

template <class Real>
std::complex<Real> EntireFunctionModel::log_coefficient(long k) const {
  using std::log;
  const Real pi = pi_v<Real>();
  switch (kind_) {
    case ModelKind::Exp:
      return {-log_gamma_real<Real>(Real(k + 1)), Real(0)};
    case ModelKind::MittagLeffler:
      return {-log_gamma_real<Real>(Real(k) / Real(profile_.lambda) + Real(1)), Real(0)};
    case ModelKind::Section5: {
      const Real lg = log_gamma_real<Real>(Real(k + 1));
      if (k % 2 == 0) return {log(Real(2)) - log(Real(k + 1)) - lg, Real(0)};
      return {log(Real(2)) - log(Real(k + 2)) - lg, pi};
    }
    case ModelKind::Custom:
    default: {
      const Complex c = coefficient(k);
      if (c == Complex(0.0, 0.0)) return {-std::numeric_limits<Real>::infinity(), Real(0)};
      return {Real(std::log(std::abs(c))), Real(std::arg(c))};
    }
  }
}

template <class Real>
std::complex<Real> EntireFunctionModel::log_coefficient_ratio(long k) const {
  using std::log;
  const Real pi = pi_v<Real>();
  switch (kind_) {
    case ModelKind::Exp:
      return {-log(Real(k + 1)), Real(0)};
    case ModelKind::MittagLeffler: {
      if (profile_.lambda == 1.0) return {-log(Real(k + 1)), Real(0)};
      const Real lambda_r(profile_.lambda);
      return {log_gamma_real<Real>(Real(k) / lambda_r + Real(1)) -
                  log_gamma_real<Real>(Real(k + 1) / lambda_r + Real(1)),
              Real(0)};
    }
    case ModelKind::Section5:
      // c_{k+1}/c_k = -1/(k+3) for even k, -1/(k+1) for odd k
      return {-log(Real(k % 2 == 0 ? k + 3 : k + 1)), pi};
    case ModelKind::Custom:
    default: {
      const Complex r = coefficient_log_ratio(k);
      return {Real(r.real()), Real(r.imag())};
    }
  }
}

}  // namespace psums
