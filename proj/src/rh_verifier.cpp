#include "psums/rh_verifier.hpp"

#include "psums/partial_sums.hpp"
#include "psums/special_functions.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace psums {

namespace {

constexpr double kRoundoff = 2.2e-16;

struct Gamma1Pieces {
  Gamma1 ball;
  std::vector<ContourSegment> pieces;  // right of the arc, then left
};

Gamma1Pieces split_gamma1(const Contour& contour, double epsilon) {
  Gamma1Pieces g;
  g.ball = gamma1_circle(contour, epsilon > 0.0 ? epsilon : default_epsilon(contour));
  auto [right, left] = split_segment(g.ball.circle, g.ball.angle1);
  g.pieces = {right, left};
  return g;
}

// Points of Gamma_1 for a sup-norm estimate, staggered off s1 and s2.
std::vector<Complex> gamma1_samples(const Gamma1& ball, int count) {
  std::vector<Complex> pts;
  for (int j = 0; j < count; ++j) {
    const double t = ball.circle.t_begin + 2.0 * kPi * (j + 0.5) / count;
    pts.push_back(ball.circle.point(t));
  }
  return pts;
}

Complex left_normal(const ContourSegment& seg, double t) {
  const Complex d = seg.tangent(t);
  return kI * d / std::abs(d);
}

const double kOffsets[5] = {1e-3, 5e-4, 2.5e-4, 1.25e-4, 6.25e-5};

template <class Eval>
JumpCheck jump_at(const std::string& object, Complex z0, Complex normal, Complex predicted, Eval&& eval,
                  bool quadrature) {
  std::vector<Complex> diffs;
  double quad_error = 0.0, magnitude = 0.0;
  for (double h : kOffsets) {
    const auto [plus, e_plus] = eval(z0 + h * normal);
    const auto [minus, e_minus] = eval(z0 - h * normal);
    diffs.push_back(plus - minus);
    quad_error += e_plus + e_minus;
    magnitude += std::abs(plus) + std::abs(minus);
  }
  JumpCheck c;
  c.object = object;
  c.z0 = z0;
  const auto [value, extrap] = richardson_halving(diffs);
  c.computed = value;
  c.predicted = predicted;
  c.residual = std::abs(value - predicted);
  c.quadrature_error = quad_error;
  c.extrapolation_error = extrap;
  // Without quadrature the only other error is the evaluation rounding of the values.
  const double evaluation = quadrature ? 0.0 : 64.0 * kRoundoff * magnitude;
  c.tolerance = 10.0 * (quad_error + extrap + evaluation);
  c.pass = c.residual <= c.tolerance;
  return c;
}

double rms(const Eigen::VectorXd& v) { return std::sqrt(v.squaredNorm() / double(v.size())); }

DecayFit fit_generic(const std::vector<int>& n, const std::vector<double>& mags, bool log_linear) {
  if (n.size() != mags.size() || n.size() < 2) throw DomainError("decay fit: need at least two matching samples");
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i > 0 && n[i] <= n[i - 1]) throw DomainError("decay fit: n values must increase strictly");
    if (!(mags[i] > 0.0)) throw DomainError("decay fit: magnitudes must be positive");
  }
  const Eigen::Index m = Eigen::Index(n.size());
  Eigen::MatrixXd X(m, 2);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = log_linear ? double(n[i]) : std::log(double(n[i]));
    y(i) = std::log(mags[i]);
  }
  const Eigen::Vector2d beta = X.colPivHouseholderQr().solve(y);
  DecayFit fit;
  fit.n_values = n;
  fit.magnitudes = mags;
  fit.intercept = beta(0);
  fit.fitted_slope = beta(1);
  fit.log_linear = log_linear;
  const Eigen::VectorXd resid = y - X * beta;
  const Eigen::VectorXd centered = y.array() - y.mean();
  const double spread = rms(centered);
  fit.fit_residual = spread > 0.0 ? rms(resid) / spread : 0.0;
  return fit;
}

}  // namespace

Complex log_prefactor_norm(const EntireFunctionModel& model, int n) {
  const double r = scaling_radius(n, model.lambda());
  const GrowthProfile& p = model.profile();
  Complex out = std::log(model.deviation_prefactor()) + p.a * std::log(r);
  if (p.b != Complex(0.0, 0.0)) {
    if (!(r > 1.0)) throw DomainError("F_n: log r_n must be positive when b != 0");
    out += p.b * std::log(std::log(r));
  }
  return out;
}

Complex log_F_density(const EntireFunctionModel& model, int n, Complex s) {
  const double r = scaling_radius(n, model.lambda());
  const LogComplex f = model.log_evaluate(r * s);
  if (f.is_zero()) return {-std::numeric_limits<double>::infinity(), 0.0};
  return f.log() - log_prefactor_norm(model, n) - double(n) / model.lambda() - double(n) * std::log(s);
}

CauchyIntegralResult F_n(const EntireFunctionModel& model, const Contour& contour, int n, Complex z, double tol) {
  if (n < 1) throw DomainError("F_n: n must be positive");
  if (z == Complex(0.0, 0.0)) throw DomainError("F_n: z = 0");
  const double r = scaling_radius(n, model.lambda());
  const Complex norm = log_prefactor_norm(model, n) + double(n) / model.lambda();
  auto density = [&](Complex s) -> Complex {
    const LogComplex f = model.log_evaluate(r * s);
    if (f.is_zero()) return {-std::numeric_limits<double>::infinity(), 0.0};
    return f.log() - norm - double(n) * std::log(s);
  };
  return cauchy_integral_log(contour.segments, density, z, tol);
}

Complex F_n_closed_form(const EntireFunctionModel& model, const Contour& contour, int n, Complex z) {
  if (n < 1) throw DomainError("F_n: n must be positive");
  if (z == Complex(0.0, 0.0)) throw DomainError("F_n: z = 0");
  const double r = scaling_radius(n, model.lambda());
  const Complex log_norm = log_prefactor_norm(model, n) + double(n) / model.lambda() + double(n) * std::log(z);
  const bool inside = winding_number(contour, z) > 0.5;
  if (inside) {
    const LogComplex tail = section_tail_certified(model, n - 1, r * z).value;
    if (tail.is_zero()) return 0.0;
    return std::exp(tail.log() - log_norm);
  }
  const LogComplex p = section_value(model, n - 1, r * z);
  if (p.is_zero()) return 0.0;
  return -std::exp(p.log() - log_norm);
}

CauchyIntegralResult G_n(const Contour& contour, double lambda, int n, Complex z, double tol) {
  if (n < 1) throw DomainError("G_n: n must be positive");
  auto density = [&](Complex s) { return double(n) * phi(s, lambda); };
  return cauchy_integral_log(sector_part(contour), density, z, tol);
}

PnValue P_n(const SaddleChart& chart, int n, Complex z) {
  if (n < 1) throw DomainError("P_n: n must be positive");
  if (!chart.in_domain(z)) throw DomainError("P_n: z outside the chart domain");
  const Complex xi = chart.inverse(z);
  if (std::abs(xi.real()) <= 1e-14 * std::max(1.0, std::abs(xi))) throw DomainError("P_n: z on the descent arc");
  PnValue out;
  out.left = xi.real() < 0.0;
  const double root_n = std::sqrt(double(n));
  out.chart_form = gaussian_cauchy_h(-kI * root_n * xi);

  // Closed form from phi alone; the chart only picks the sign of the square root.
  const Complex phase = double(n) * phi(z, chart.lambda());
  Complex q = std::sqrt(phase);
  if ((std::conj(q) * xi).real() < 0.0) q = -q;
  const Complex x = out.left ? -q : q;
  const double sign = out.left ? 0.5 : -0.5;
  if (std::abs(x) < 25.0) {
    out.closed_form = sign * std::exp(phase) * erfc(x);
  } else {
    // e^{phase} erfc(x) = e^{phase - x^2} erfcx(x) keeps both factors in range
    out.closed_form = sign * std::exp(phase - x * x) * erfcx(x);
  }
  return out;
}

std::pair<Complex, double> richardson_halving(const std::vector<Complex>& v) {
  if (v.empty()) throw DomainError("richardson: no values");
  std::vector<std::vector<Complex>> T(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    T[k].push_back(v[k]);
    for (std::size_t j = 1; j <= k; ++j) {
      const double f = std::ldexp(1.0, int(j)) - 1.0;
      T[k].push_back(T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / f);
    }
  }
  const std::size_t m = v.size() - 1;
  const double err = m == 0 ? 0.0 : std::abs(T[m][m] - T[m][m - 1]);
  return {T[m][m], err};
}

std::vector<JumpCheck> jump_checks_F(const EntireFunctionModel& model, const Contour& contour, int n, double tol) {
  // (segment index, fraction of its parameter range)
  const std::pair<std::size_t, double> spots[5] = {{0, 0.3}, {0, 0.75}, {1, 0.5}, {2, 0.4}, {3, 0.6}};
  std::vector<JumpCheck> out;
  for (const auto& [idx, frac] : spots) {
    const ContourSegment& seg = contour.segments.at(idx % contour.segments.size());
    const double t = seg.t_begin + frac * (seg.t_end - seg.t_begin);
    const Complex z0 = seg.point(t);
    const Complex predicted = std::exp(log_F_density(model, n, z0));
    auto eval = [&](Complex z) {
      const CauchyIntegralResult r = F_n(model, contour, n, z, tol);
      return std::make_pair(r.value, r.error);
    };
    out.push_back(jump_at("F_n", z0, left_normal(seg, t), predicted, eval, true));
  }
  return out;
}

std::vector<JumpCheck> jump_checks_G(const Contour& contour, int n, double tol) {
  const std::vector<ContourSegment> arc = sector_part(contour);
  const std::pair<std::size_t, double> spots[5] = {{0, 0.3}, {0, 0.55}, {0, 0.8}, {1, 0.5}, {2, 0.4}};
  std::vector<JumpCheck> out;
  for (const auto& [idx, frac] : spots) {
    const ContourSegment& seg = arc.at(idx % arc.size());
    const double t = seg.t_begin + frac * (seg.t_end - seg.t_begin);
    const Complex z0 = seg.point(t);
    const Complex predicted = std::exp(double(n) * phi(z0, contour.lambda));
    auto eval = [&](Complex z) {
      const CauchyIntegralResult r = G_n(contour, contour.lambda, n, z, tol);
      return std::make_pair(r.value, r.error);
    };
    out.push_back(jump_at("G_n", z0, left_normal(seg, t), predicted, eval, true));
  }
  return out;
}

std::vector<JumpCheck> jump_checks_P(const Contour& contour, int n) {
  const SaddleChart& chart = *contour.chart;
  const double root_n = std::sqrt(double(n));
  std::vector<JumpCheck> out;
  for (double x : {-1.6, -0.7, 0.2, 0.9, 1.7}) {
    const double u = x / root_n;
    const Complex z0 = chart.forward(Complex(0.0, u));
    const Complex d = kI * chart.forward_derivative(Complex(0.0, u));
    const Complex normal = kI * d / std::abs(d);
    const Complex predicted = std::exp(double(n) * phi(z0, contour.lambda));
    auto eval = [&](Complex z) { return std::make_pair(P_n(chart, n, z).chart_form, 0.0); };
    out.push_back(jump_at("P_n", z0, normal, predicted, eval, false));
  }
  return out;
}

std::string to_string(LemmaSuite s) {
  switch (s) {
    case LemmaSuite::GOnGamma1:
      return "G_on_Gamma1";
    case LemmaSuite::Gamma2Tail:
      return "Gamma2_tail";
    case LemmaSuite::FOnGamma1:
      return "F_on_Gamma1";
    case LemmaSuite::POnGamma1:
    default:
      return "P_on_Gamma1";
  }
}

LemmaSuite lemma_suite_from_string(const std::string& s) {
  if (s == "G_on_Gamma1" || s == "2" || s == "lemma2") return LemmaSuite::GOnGamma1;
  if (s == "Gamma2_tail" || s == "3" || s == "lemma3") return LemmaSuite::Gamma2Tail;
  if (s == "F_on_Gamma1" || s == "4" || s == "lemma4") return LemmaSuite::FOnGamma1;
  if (s == "P_on_Gamma1" || s == "5" || s == "lemma5") return LemmaSuite::POnGamma1;
  throw DomainError("unknown lemma suite '" + s + "'");
}

DecayFit fit_power_law(const std::vector<int>& n, const std::vector<double>& magnitudes) {
  return fit_generic(n, magnitudes, false);
}

DecayFit fit_log_linear(const std::vector<int>& n, const std::vector<double>& magnitudes) {
  return fit_generic(n, magnitudes, true);
}

bool monotone_trend(const std::vector<double>& values, int allowed_rises) {
  int rises = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] >= values[i - 1]) ++rises;
  return rises <= allowed_rises && values.size() >= 2 && values.back() < values.front();
}

namespace {

// (1/2 pi i) int over Gamma_1 of inner(s) ds/(s - z), with the inner object's largest
// quadrature error propagated through the length of the circle.
struct OuterResult {
  Complex value;
  double error = 0.0;
  double sup = 0.0;
};

template <class Inner>
OuterResult gamma1_integral(const Gamma1Pieces& g, Complex z, double outer_tol, Inner&& inner) {
  double inner_error = 0.0;
  auto density = [&](Complex s) {
    const auto [v, e] = inner(s);
    inner_error = std::max(inner_error, e);
    return v;
  };
  const CauchyIntegralResult r = cauchy_integral(g.pieces, density, z, outer_tol);
  double dist = std::numeric_limits<double>::infinity();
  for (Complex s : gamma1_samples(g.ball, 256)) dist = std::min(dist, std::abs(s - z));
  const double radius = 2.0 * g.ball.epsilon;
  OuterResult out;
  out.value = r.value;
  out.error = r.error + inner_error * radius / dist;
  for (Complex s : gamma1_samples(g.ball, 128)) out.sup = std::max(out.sup, std::abs(inner(s).first));
  return out;
}

}  // namespace

DecayFit lemma_decay_suite(LemmaSuite which, const EntireFunctionModel& model, const Contour& contour,
                           const std::vector<int>& n_grid, Complex z_probe, const SuiteSettings& settings) {
  const Gamma1Pieces g = split_gamma1(contour, settings.epsilon);
  if (!(std::abs(z_probe - 1.0) < g.ball.epsilon)) throw DomainError("lemma suite: z_probe must lie in B_eps(1)");
  const double lambda = contour.lambda;
  std::vector<double> mags, errors, sups;
  for (int n : n_grid) {
    OuterResult r;
    switch (which) {
      case LemmaSuite::GOnGamma1:
        r = gamma1_integral(g, z_probe, settings.outer_tol, [&](Complex s) {
          const CauchyIntegralResult q = G_n(contour, lambda, n, s, settings.inner_tol);
          return std::make_pair(q.value, q.error);
        });
        break;
      case LemmaSuite::FOnGamma1:
        r = gamma1_integral(g, z_probe, settings.outer_tol, [&](Complex s) {
          const CauchyIntegralResult q = F_n(model, contour, n, s, settings.inner_tol);
          return std::make_pair(q.value, q.error);
        });
        break;
      case LemmaSuite::POnGamma1:
        r = gamma1_integral(g, z_probe, settings.outer_tol, [&](Complex s) {
          return std::make_pair(P_n(*contour.chart, n, s).chart_form, 0.0);
        });
        break;
      case LemmaSuite::Gamma2Tail: {
        auto density = [&](Complex s) { return log_F_density(model, n, s); };
        const CauchyIntegralResult q =
            cauchy_integral_log(outside_ball(contour, g.ball), density, z_probe, settings.inner_tol);
        r.value = q.value;
        r.error = q.error;
        break;
      }
    }
    mags.push_back(std::abs(r.value));
    errors.push_back(r.error);
    sups.push_back(r.sup);
  }
  DecayFit fit = which == LemmaSuite::Gamma2Tail ? fit_log_linear(n_grid, mags) : fit_power_law(n_grid, mags);
  fit.label = to_string(which);
  fit.errors = errors;
  if (which != LemmaSuite::Gamma2Tail) {
    fit.sup_norms = sups;
    fit.sup_norm_slope = fit_power_law(n_grid, sups).fitted_slope;
  }
  return fit;
}

MDecomposition m_decomposition(const EntireFunctionModel& model, const Contour& contour, int n, Complex z,
                               const SuiteSettings& settings) {
  const Gamma1Pieces g = split_gamma1(contour, settings.epsilon);
  if (!(std::abs(z - 1.0) < g.ball.epsilon)) throw DomainError("m_decomposition: z must lie in B_eps(1)");
  const double lambda = contour.lambda;
  MDecomposition d;
  d.n = n;
  d.z = z;
  const OuterResult p = gamma1_integral(g, z, settings.outer_tol, [&](Complex s) {
    return std::make_pair(P_n(*contour.chart, n, s).chart_form, 0.0);
  });
  const OuterResult gg = gamma1_integral(g, z, settings.outer_tol, [&](Complex s) {
    const CauchyIntegralResult q = G_n(contour, lambda, n, s, settings.inner_tol);
    return std::make_pair(q.value, q.error);
  });
  const OuterResult f = gamma1_integral(g, z, settings.outer_tol, [&](Complex s) {
    const CauchyIntegralResult q = F_n(model, contour, n, s, settings.inner_tol);
    return std::make_pair(q.value, q.error);
  });
  auto density = [&](Complex s) { return log_F_density(model, n, s); };
  const CauchyIntegralResult tail = cauchy_integral_log(outside_ball(contour, g.ball), density, z, settings.inner_tol);
  d.p_term = -p.value;
  d.g_term = gg.value;
  d.f_term = -f.value;
  d.tail_term = tail.value;
  d.m = d.p_term + d.g_term + d.f_term + d.tail_term;
  const CauchyIntegralResult gz = G_n(contour, lambda, n, z, settings.inner_tol);
  d.g_minus_p = gz.value - P_n(*contour.chart, n, z).chart_form;
  d.discrepancy = std::abs(d.g_minus_p - d.m);
  d.error_estimate = p.error + gg.error + f.error + tail.error + gz.error;
  d.consistent = d.discrepancy <= 10.0 * d.error_estimate;
  return d;
}

namespace {

// Density of F_n - G_n: on the sector part e^{n phi}(s^a (1 + delta~) - 1), elsewhere the F density.
struct DifferenceDensity {
  const EntireFunctionModel& model;
  int n;
  double r;

  Complex sector(Complex s) const {
    const Complex a = model.profile().a;
    const Complex dt = deviation_tilde(model, r, s);
    Complex bracket;
    if (a == Complex(0.0, 0.0)) bracket = dt;
    else bracket = std::exp(a * std::log(s) + log1p_complex(dt)) - 1.0;
    if (bracket == Complex(0.0, 0.0)) return {-std::numeric_limits<double>::infinity(), 0.0};
    return double(n) * phi(s, model.lambda()) + std::log(bracket);
  }
  Complex off_sector(Complex s) const { return log_F_density(model, n, s); }
};

std::pair<std::vector<ContourSegment>, std::vector<ContourSegment>> sector_split(const Contour& contour) {
  return {sector_part(contour), off_sector_part(contour)};
}

}  // namespace

CauchyIntegralResult fn_minus_gn(const EntireFunctionModel& model, const Contour& contour, int n, Complex z,
                                 double tol) {
  const DifferenceDensity dd{model, n, scaling_radius(n, model.lambda())};
  const auto [on, off] = sector_split(contour);
  CauchyIntegralResult a = cauchy_integral_log(on, [&](Complex s) { return dd.sector(s); }, z, tol);
  const CauchyIntegralResult b = cauchy_integral_log(off, [&](Complex s) { return dd.off_sector(s); }, z, tol);
  a.value += b.value;
  a.error += b.error;
  a.nodes += b.nodes;
  return a;
}

Complex fn_minus_gn_fixed(const EntireFunctionModel& model, const Contour& contour, int n, Complex z, int panels) {
  const DifferenceDensity dd{model, n, scaling_radius(n, model.lambda())};
  const auto [on, off] = sector_split(contour);
  return cauchy_integral_fixed(on, [&](Complex s) { return dd.sector(s); }, z, panels) +
         cauchy_integral_fixed(off, [&](Complex s) { return dd.off_sector(s); }, z, panels);
}

DecayFit fn_gn_agreement(const EntireFunctionModel& model, const Contour& contour, const std::vector<int>& n_grid,
                         Complex w, double tol) {
  if (!(w.real() < 0.0)) throw DomainError("fn_gn_agreement: Re w must be negative");
  std::vector<double> mags, errors;
  for (int n : n_grid) {
    const Complex z = 1.0 + w / std::sqrt(double(n));
    const CauchyIntegralResult r = fn_minus_gn(model, contour, n, z, tol);
    // exactly zero differences (no deviation, empty off-sector arc) are floored for the fit
    mags.push_back(std::max(std::abs(r.value), std::numeric_limits<double>::min()));
    errors.push_back(r.error);
  }
  DecayFit fit = fit_power_law(n_grid, mags);
  fit.label = "F_minus_G";
  fit.errors = errors;
  return fit;
}

std::vector<PipelineRow> theorem1_pipeline(const EntireFunctionModel& model, const Contour& contour, int n,
                                           const std::vector<Complex>& w_grid, double tol) {
  const double lambda = model.lambda();
  const double root_n = std::sqrt(double(n));
  const double r = scaling_radius(n, lambda);
  std::vector<RatioSample> window;
  {
    std::vector<Complex> ws(w_grid.begin(), w_grid.end());
    window = ratio_on_window(model, make_window(model, n, ws));
  }
  std::vector<PipelineRow> rows;
  for (std::size_t i = 0; i < w_grid.size(); ++i) {
    const Complex w = w_grid[i];
    if (!(w.real() < 0.0)) throw DomainError("theorem1_pipeline: Re w must be negative");
    const Complex z = 1.0 + w / root_n;
    PipelineRow row;
    row.n = n;
    row.w = w;
    row.F = F_n(model, contour, n, z, tol).value;
    const Complex gauss = std::exp(lambda * w * w / 2.0);
    row.composite = gauss - 0.5 * gauss * erfc(w * std::sqrt(lambda / 2.0));
    row.f_discrepancy = std::abs(row.F - row.composite);
    const Complex log_norm = log_prefactor_norm(model, n) + double(n) / lambda + double(n) * std::log(z);
    const Complex log_f = model.log_evaluate(r * z).log();
    row.ratio_from_F = 1.0 - row.F * std::exp(log_norm - log_f);
    row.target = 0.5 * erfc(w * std::sqrt(lambda / 2.0));
    row.ratio_error = std::abs(row.ratio_from_F - row.target);
    row.window_abs_error = window[i].abs_error;
    row.path_agreement = std::abs(row.ratio_error - row.window_abs_error);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Complex> interior_probes(const Contour& contour) {
  // fixed pattern inside the unit-circle arc and left of the descent arc
  const std::vector<Complex> pattern = {{0.5, 0.0},  {0.2, 0.3},   {0.2, -0.3}, {-0.3, 0.4}, {-0.3, -0.4},
                                        {-0.6, 0.0}, {0.7, 0.25}, {0.7, -0.25}, {0.0, 0.6}, {0.85, 0.1}};
  std::vector<Complex> out;
  for (Complex z : pattern) {
    if (winding_number(contour, z) < 0.5) throw NumericError("interior_probes: probe point outside the contour");
    out.push_back(z);
  }
  return out;
}

std::vector<ClosedFormRow> fn_explicit_check(const EntireFunctionModel& model, const Contour& contour,
                                             const std::vector<int>& n_values, const std::vector<Complex>& probes,
                                             double tol) {
  std::vector<ClosedFormRow> rows;
  for (int n : n_values) {
    for (Complex z : probes) {
      ClosedFormRow row;
      row.n = n;
      row.z = z;
      row.inside = winding_number(contour, z) > 0.5;
      row.quadrature = F_n(model, contour, n, z, tol).value;
      row.closed_form = F_n_closed_form(model, contour, n, z);
      row.relative_error = std::abs(row.quadrature - row.closed_form) / std::abs(row.closed_form);
      rows.push_back(row);
    }
  }
  return rows;
}

std::pair<double, double> deformation_invariance(double lambda, double theta, double margin_a, double margin_b, int n,
                                                 Complex z, double tol) {
  const Contour a = admissible_contour(lambda, theta, margin_a);
  const Contour b = admissible_contour(lambda, theta, margin_b);
  const CauchyIntegralResult ga = G_n(a, lambda, n, z, tol), gb = G_n(b, lambda, n, z, tol);
  return {std::abs(ga.value - gb.value), ga.error + gb.error};
}

Contour model_contour(const EntireFunctionModel& model, double margin) {
  return admissible_contour(model.lambda(), model.profile().theta, margin);
}

}  // namespace psums
