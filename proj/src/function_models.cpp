#include "psums/function_models.hpp"

#include "psums/saddle_geometry.hpp"
#include "psums/special_functions.hpp"

#include <algorithm>
#include <sstream>

namespace psums {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;

Complex power_lambda(Complex z, double lambda) {
  if (lambda == 1.0) return z;
  if (lambda == 2.0) return z * z;
  return std::exp(lambda * std::log(z));
}

// e^L - 1 without cancellation for small L.
Complex expm1_complex(Complex L) {
  const double x = L.real();
  const double y = wrap_angle(L.imag());
  if (std::abs(x) < 0.5 && std::abs(y) < 0.5) {
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
  }
  return std::exp(Complex(x, y)) - 1.0;
}

template <class Real>
std::pair<LogComplex, double> series_sum(const EntireFunctionModel& model, Complex z_in,
                                         bool derivative) {
  using std::abs;
  using std::exp;
  using std::log;
  const Real u = unit_roundoff<Real>();
  const std::complex<Real> z = from_double<Real>(z_in);
  const Real log_abs_z = log(abs(z));
  const Real arg_z = atan2(z.imag(), z.real());
  const long degree = model.max_degree();
  const long last = degree < 0 ? -1 : (derivative ? degree - 1 : degree);
  if (degree >= 0 && last < 0) return {LogComplex::zero(), 0.0};

  auto log_term = [&](long k) {
    std::complex<Real> c = derivative ? model.log_coefficient<Real>(k + 1) : model.log_coefficient<Real>(k);
    if (derivative) c += std::complex<Real>(log(Real(k + 1)), Real(0));
    return std::complex<Real>(c.real() + Real(k) * log_abs_z, c.imag() + Real(k) * arg_z);
  };

  Real scale = -std::numeric_limits<Real>::infinity();
  std::complex<Real> sum(0);
  Real abs_weighted(0);
  const long k_cap = degree >= 0 ? last : 200000;
  std::complex<Real> next = log_term(0);
  bool finished = degree >= 0;
  for (long k = 0; k <= k_cap; ++k) {
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
    abs_weighted += magnitude * (Real(1) + abs(lt.real()) + Real(k) * abs(log_abs_z));
    if (degree < 0 && k > 2 && k < k_cap) {
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
  if (!finished) throw RangeExceeded("series evaluation: tail bound not reached");
  const Real modulus = abs(sum);
  if (modulus == Real(0)) return {LogComplex::zero(), std::numeric_limits<double>::infinity()};
  const LogComplex value{to_double(scale + log(modulus)), to_double(atan2(sum.imag(), sum.real()))};
  return {value, to_double(Real(4) * u * abs_weighted / modulus)};
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

void validate_profile(const GrowthProfile& p) {
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) throw DomainError("profile: lambda must be positive and finite");
  const double cap = std::min(kPi, kPi / p.lambda);
  if (!(p.theta > 0.0 && p.theta < cap)) throw DomainError("profile: theta must satisfy 0 < theta < min(pi, pi/lambda)");
  if (!(p.mu < 1.0)) throw DomainError("profile: mu must be < 1");
}

EntireFunctionModel EntireFunctionModel::exp() {
  GrowthProfile p;
  p.lambda = 1.0;
  p.theta = kPi / 3.0;
  p.mu = std::cos(kPi / 3.0) * 1.01;
  return EntireFunctionModel("exp", ModelKind::Exp, p);
}

EntireFunctionModel EntireFunctionModel::mittag_leffler(double lambda) {
  GrowthProfile p;
  p.lambda = lambda;
  p.theta = 0.5 * std::min(kPi, kPi / lambda);
  p.mu = std::min(0.99, std::max(std::cos(lambda * p.theta), 0.0) + 0.01);
  validate_profile(p);
  std::ostringstream name;
  name << "mittag_leffler(" << lambda << ")";
  return EntireFunctionModel(name.str(), ModelKind::MittagLeffler, p);
}

EntireFunctionModel EntireFunctionModel::section5_example() {
  GrowthProfile p;
  p.a = -2.0;
  p.lambda = 1.0;
  p.theta = kPi / 3.0;
  p.mu = std::cos(kPi / 3.0) * 1.01;
  return EntireFunctionModel("section5_example", ModelKind::Section5, p);
}

EntireFunctionModel EntireFunctionModel::custom(std::string name, GrowthProfile profile,
                                                std::vector<Complex> coefficients) {
  validate_profile(profile);
  if (coefficients.empty()) throw DomainError("custom model: empty coefficient table");
  for (Complex c : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("custom model: non-finite coefficient");
  }
  while (coefficients.size() > 1 && coefficients.back() == Complex(0.0, 0.0)) coefficients.pop_back();
  EntireFunctionModel m(std::move(name), ModelKind::Custom, profile);
  m.table_ = std::move(coefficients);
  return m;
}

bool EntireFunctionModel::real_coefficients() const {
  if (kind_ != ModelKind::Custom) return true;
  return std::all_of(table_.begin(), table_.end(), [](Complex c) { return c.imag() == 0.0; });
}

long EntireFunctionModel::max_degree() const {
  return kind_ == ModelKind::Custom ? static_cast<long>(table_.size()) - 1 : -1;
}

Complex EntireFunctionModel::coefficient(long k) const {
  if (k < 0) throw DomainError("coefficient: negative index");
  if (kind_ == ModelKind::Custom) return k < static_cast<long>(table_.size()) ? table_[k] : Complex(0.0, 0.0);
  const std::complex<double> lc = log_coefficient<double>(k);
  return std::polar(std::exp(lc.real()), lc.imag());
}

Complex EntireFunctionModel::coefficient_log_ratio(long k) const {
  if (k < 0) throw DomainError("coefficient_log_ratio: negative index");
  if (kind_ == ModelKind::Custom) {
    const Complex c0 = coefficient(k);
    const Complex c1 = coefficient(k + 1);
    if (c0 == Complex(0.0, 0.0) || c1 == Complex(0.0, 0.0)) {
      throw DomainError("coefficient_log_ratio: vanishing coefficient");
    }
    return {std::log(std::abs(c1)) - std::log(std::abs(c0)), wrap_angle(std::arg(c1) - std::arg(c0))};
  }
  return log_coefficient_ratio<double>(k);
}

double EntireFunctionModel::deviation_prefactor() const {
  return kind_ == ModelKind::MittagLeffler ? profile_.lambda : 1.0;
}

LogComplex EntireFunctionModel::log_series(Complex z, bool derivative) const {
  if (z == Complex(0.0, 0.0)) {
    const Complex c = coefficient(derivative ? 1 : 0);
    return LogComplex::from_value(c);
  }
  double last_error = 0.0;
  for (Precision rung : ladder_up_to(Precision::Bits512)) {
    const auto r = dispatch_precision(rung, [&]<class Real>() { return series_sum<Real>(*this, z, derivative); });
    last_error = r.second;
    if (r.second <= 1e-13) return r.first;
  }
  std::ostringstream msg;
  msg << name_ << ": series evaluation not certified (estimated relative error " << last_error << ")";
  throw PrecisionExhausted(msg.str());
}

LogComplex EntireFunctionModel::log_evaluate(Complex z) const {
  switch (kind_) {
    case ModelKind::Exp:
      return LogComplex::from_log(z);
    case ModelKind::MittagLeffler:
      if (profile_.lambda == 1.0) return LogComplex::from_log(z);
      if (profile_.lambda == 2.0) {
        // E_{1/2}(z) = e^{z^2} erfc(-z)
        if (z.real() < 0.0) return LogComplex::from_value(erfcx(-z));
        const LogComplex lead = LogComplex::from_log(z * z + std::log(2.0));
        return add(lead, LogComplex::from_value(-erfcx(z)));
      }
      return mittag_leffler_log(z, profile_.lambda);
    case ModelKind::Section5: {
      if (std::abs(z) < 1.0) return log_series(z, false);
      const LogComplex grow = LogComplex::from_log(z);
      const LogComplex decay = LogComplex::from_log(-z + std::log(1.0 + 2.0 * z) + Complex(0.0, kPi));
      return add(grow, decay) / LogComplex::from_log(2.0 * std::log(z));
    }
    case ModelKind::Custom:
    default:
      return log_series(z, false);
  }
}

Complex EntireFunctionModel::evaluate(Complex z) const {
  const LogComplex v = log_evaluate(z);
  if (v.log_abs > 709.0) throw RangeExceeded(name_ + ": value overflows double");
  return v.value();
}

Complex EntireFunctionModel::log_derivative(Complex z) const {
  switch (kind_) {
    case ModelKind::Exp:
      return 1.0;
    case ModelKind::MittagLeffler:
      if (profile_.lambda == 1.0) return 1.0;
      if (profile_.lambda == 2.0) {
        // E' = 2 z E + 2/sqrt(pi)
        return 2.0 * z + ratio(LogComplex::from_value(kTwoOverSqrtPi), log_evaluate(z));
      }
      return ratio(log_series(z, true), log_evaluate(z));
    case ModelKind::Section5: {
      if (std::abs(z) < 1.0) return ratio(log_series(z, true), log_series(z, false));
      const LogComplex grow = LogComplex::from_log(z);
      const LogComplex numer = add(grow, LogComplex::from_log(-z + std::log(1.0 + 2.0 * z) + Complex(0.0, kPi)));
      const LogComplex numer_prime = add(grow, LogComplex::from_log(-z + std::log(2.0 * z - 1.0)));
      return ratio(numer_prime, numer) - 2.0 / z;
    }
    case ModelKind::Custom:
    default:
      return ratio(log_series(z, true), log_series(z, false));
  }
}

Complex EntireFunctionModel::derivative(Complex z) const {
  if (kind_ == ModelKind::Custom || (kind_ == ModelKind::Section5 && std::abs(z) < 1.0)) {
    const LogComplex v = log_series(z, true);
    if (v.log_abs > 709.0) throw RangeExceeded(name_ + ": derivative overflows double");
    return v.value();
  }
  const LogComplex f = log_evaluate(z);
  const LogComplex v = f * LogComplex::from_value(log_derivative(z));
  if (v.log_abs > 709.0) throw RangeExceeded(name_ + ": derivative overflows double");
  return v.value();
}

EntireFunctionModel builtin_model(const std::string& raw_name, double lambda) {
  std::string name = lower(raw_name);
  const auto open = name.find('(');
  if (open != std::string::npos) {
    const auto close = name.find(')', open);
    if (close == std::string::npos) throw DomainError("model name: unbalanced parenthesis in '" + raw_name + "'");
    try {
      lambda = std::stod(name.substr(open + 1, close - open - 1));
    } catch (const std::exception&) {
      throw DomainError("model name: bad lambda in '" + raw_name + "'");
    }
    name = name.substr(0, open);
  }
  if (name == "exp") return EntireFunctionModel::exp();
  if (name == "section5_example" || name == "section5") return EntireFunctionModel::section5_example();
  if (name == "mittag_leffler" || name == "ml") {
    if (!(lambda > 0.0)) throw DomainError("model '" + raw_name + "' needs a positive lambda");
    return EntireFunctionModel::mittag_leffler(lambda);
  }
  throw DomainError("unknown model '" + raw_name + "'");
}

namespace {

// log f(z) - a Log z - b Log Log z - z^lambda - log(prefactor)
Complex log_deviation_factor(const EntireFunctionModel& model, Complex z) {
  const GrowthProfile& p = model.profile();
  if (z == Complex(0.0, 0.0)) throw DomainError("deviation: z = 0");
  if (std::abs(std::arg(z)) > p.theta + 1e-12) throw DomainError("deviation: z outside the growth sector");
  Complex L = model.log_evaluate(z).log() - power_lambda(z, p.lambda) - std::log(model.deviation_prefactor());
  const Complex log_z = std::log(z);
  if (p.a != Complex(0.0, 0.0)) L -= p.a * log_z;
  if (p.b != Complex(0.0, 0.0)) {
    if (std::abs(z) <= 1.0) throw DomainError("deviation: (log z)^b needs |z| > 1");
    L -= p.b * std::log(log_z);
  }
  return L;
}

}  // namespace

DeviationSample deviation(const EntireFunctionModel& model, Complex z) {
  DeviationSample s;
  s.z = z;
  if (model.kind() == ModelKind::MittagLeffler && model.lambda() == 2.0) {
    if (z == Complex(0.0, 0.0)) throw DomainError("deviation: z = 0");
    if (std::abs(std::arg(z)) > model.profile().theta + 1e-12) throw DomainError("deviation: z outside the growth sector");
    // E_{1/2}(z) = e^{z^2}(2 - erfc(z)), so delta = -erfc(z)/2 exactly.
    s.delta = -0.5 * erfc(z);
  } else {
    s.delta = expm1_complex(log_deviation_factor(model, z));
  }
  s.modulus = std::abs(s.delta);
  return s;
}

Complex deviation_tilde(const EntireFunctionModel& model, double r, Complex t) {
  if (!(r > 1.0)) throw DomainError("deviation_tilde: r must exceed 1");
  const Complex b = model.profile().b;
  Complex L(0.0, 0.0);
  if (model.kind() == ModelKind::MittagLeffler && model.lambda() == 2.0) {
    L = std::log(1.0 + deviation(model, r * t).delta);
  } else {
    L = log_deviation_factor(model, r * t);
  }
  if (b != Complex(0.0, 0.0)) L += b * std::log(1.0 + std::log(t) / std::log(r));
  return expm1_complex(L);
}

DerivativeGrowthReport check_derivative_growth(const EntireFunctionModel& model,
                                               const std::vector<int>& n_grid,
                                               const std::vector<Complex>& z_grid, double nu,
                                               double nu_limit) {
  if (n_grid.empty() || z_grid.empty()) throw DomainError("check_derivative_growth: empty grid");
  if (!(nu > 0.0)) throw DomainError("check_derivative_growth: nu must be positive");
  if (std::isfinite(nu_limit) && !(nu < nu_limit)) {
    throw DomainError("check_derivative_growth: nu must be below -Re phi(sigma_1)");
  }
  const double theta = model.profile().theta;
  for (Complex z : z_grid) {
    if (z == Complex(0.0, 0.0) || std::abs(std::arg(z)) > theta + 1e-12) {
      throw DomainError("check_derivative_growth: grid point outside the growth sector");
    }
  }
  DerivativeGrowthReport report;
  report.nu = nu;
  for (int n : n_grid) {
    if (n < 1) throw DomainError("check_derivative_growth: n must be >= 1");
    const double r = scaling_radius(n, model.lambda());
    DerivativeGrowthRow row;
    row.n = n;
    for (Complex z : z_grid) {
      const double v = std::abs(model.log_derivative(r * z)) * std::exp(-nu * n);
      if (v > row.scaled_max) {
        row.scaled_max = v;
        row.argmax = z;
      }
    }
    report.rows.push_back(row);
  }
  // Bounded: no later value exceeds four times the first one.
  const double first = report.rows.front().scaled_max;
  report.bounded = std::all_of(report.rows.begin(), report.rows.end(),
                               [&](const DerivativeGrowthRow& r) { return r.scaled_max <= 4.0 * first; });
  return report;
}

}  // namespace psums
