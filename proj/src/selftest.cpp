#include "psums/selftest.hpp"

#include "psums/partial_sums.hpp"
#include "psums/rh_verifier.hpp"
#include "psums/saddle_geometry.hpp"
#include "psums/special_functions.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

namespace psums {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

SelfTestCheck bounded(const std::string& name, double measured, double limit) {
  return {name, measured <= limit, "max error " + sci(measured) + " (limit " + sci(limit) + ")"};
}

const Complex kProbePoints[] = {{0.3, 0.2}, {1.5, 0.5}, {2.0, -3.0}, {0.05, 4.0}, {4.5, 1.0}, {0.8, -0.01}};

SelfTestCheck erfc_reflection() {
  double worst = 0.0;
  for (Complex z : kProbePoints) worst = std::max(worst, std::abs(erfc(z) + erfc(-z) - 2.0));
  // the left half-plane is itself evaluated through the reflection, so compare against the C library too
  for (double x : {0.1, 0.9, 2.5, 5.0})
    worst = std::max(worst, std::abs(erfc(Complex(-x, 0.0)) - std::erfc(-x)) / std::erfc(-x));
  return bounded("erfc reflection erfc(z) + erfc(-z) = 2", worst, 1e-12);
}

SelfTestCheck erfc_conjugation() {
  double worst = 0.0;
  for (Complex z : kProbePoints)
    for (Complex s : {z, -z}) worst = std::max(worst, std::abs(erfc(std::conj(s)) - std::conj(erfc(s))) / std::abs(erfc(s)));
  return bounded("erfc conjugation", worst, 1e-13);
}

SelfTestCheck h_jump() {
  // h(x + i eta) - h(x - i eta) -> e^{-x^2}; the O(eta) remainder is below 1e-7 here
  double worst = 0.0;
  const double eta = 1e-9;
  for (double x : {-2.0, -0.7, 0.0, 0.4, 1.3}) {
    const Complex jump = gaussian_cauchy_h({x, eta}) - gaussian_cauchy_h({x, -eta});
    worst = std::max(worst, std::abs(jump - std::exp(-x * x)));
  }
  return bounded("h jump across the real axis", worst, 1e-7);
}

SelfTestCheck ml_is_exp() {
  double worst = 0.0;
  for (Complex z : {Complex(0.5, 0.0), Complex(-3.0, 2.0), Complex(10.0, -4.0), Complex(0.0, 7.0)})
    worst = std::max(worst, std::abs(mittag_leffler(z, 1.0) / std::exp(z) - 1.0));
  return bounded("Mittag-Leffler lambda = 1 equals exp", worst, 1e-12);
}

SelfTestCheck chart_round_trip() {
  double worst = 0.0;
  for (double lambda : {1.0, 2.0}) {
    const SaddleChart chart = build_chart(lambda);
    const double r = 0.8 * chart.radius_V();
    for (int k = 0; k < 24; ++k) {
      for (double frac : {0.25, 0.6, 1.0}) {
        const Complex xi = std::polar(frac * r, 2.0 * kPi * (k + 0.5) / 24.0);
        worst = std::max(worst, std::abs(chart.inverse(chart.forward(xi)) - xi));
      }
    }
  }
  return bounded("chart round trip", worst, 1e-12);
}

SelfTestCheck saddle_data() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
    worst = std::max(worst, std::abs(phi(1.0, lambda)));
    auto central = [&](double h) {
      return (phi(1.0 + h, lambda) + phi(1.0 - h, lambda) - 2.0 * phi(1.0, lambda)) / (h * h);
    };
    // one Richardson step cancels the h^2 term of the central difference
    const Complex second = (4.0 * central(5e-4) - central(1e-3)) / 3.0;
    worst = std::max(worst, std::abs(second - lambda));
  }
  return bounded("phi(1) = 0 and phi''(1) = lambda", worst, 1e-8);
}

SelfTestCheck window_phase_trend() {
  // n phi(1 + w/sqrt n) - lambda w^2/2 shrinks like n^{-1/2}
  std::ostringstream detail;
  bool pass = true;
  for (double lambda : {1.0, 2.0}) {
    const Complex w(-1.0, 0.5);
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {16, 64, 256, 1024, 4096}) {
      const double err = std::abs(double(n) * phi(1.0 + w / std::sqrt(double(n)), lambda) - lambda * w * w / 2.0);
      if (!(err < prev)) pass = false;
      prev = err;
    }
    detail << "lambda " << lambda << " final " << sci(prev) << "; ";
    if (!(prev < 0.05)) pass = false;
  }
  return {"n phi(1 + w/sqrt n) -> lambda w^2/2", pass, detail.str()};
}

SelfTestCheck small_zero_clouds() {
  std::ostringstream detail;
  const EntireFunctionModel exp = EntireFunctionModel::exp();
  const ZeroCloud two = zero_cloud(exp, 2, ZeroScaling::None);
  double err2 = std::abs(two.zeros.at(0) - Complex(-1.0, -1.0)) + std::abs(two.zeros.at(1) - Complex(-1.0, 1.0));
  double vieta = 0.0, conj = 0.0, slack = std::numeric_limits<double>::infinity();
  for (int n = 3; n <= 12; ++n) {
    const ZeroCloud c = zero_cloud(exp, n, ZeroScaling::None);
    vieta = std::max(vieta, vieta_discrepancy(exp, c));
    conj = std::max(conj, conjugate_symmetry_error(c));
    for (Complex z : c.zeros) slack = std::min(slack, parabola_slack(z));
  }
  detail << "n=2 error " << sci(err2) << ", vieta " << sci(vieta) << ", conjugate " << sci(conj)
         << ", min parabola slack " << sci(slack);
  return {"small zero clouds", err2 < 1e-12 && vieta < 1e-10 && conj < 1e-12 && slack > 0.0, detail.str()};
}

SelfTestCheck fn_identity() {
  const EntireFunctionModel exp = EntireFunctionModel::exp();
  const Contour contour = model_contour(exp);
  double worst = 0.0;
  for (const ClosedFormRow& r : fn_explicit_check(exp, contour, {20}, interior_probes(contour)))
    worst = std::max(worst, r.relative_error);
  return bounded("F_n closed form at n = 20", worst, 1e-6);
}

SelfTestCheck guarded(const std::string& name, const std::function<SelfTestCheck()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

bool SelfTestReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelfTestCheck& c) { return c.pass; });
}

std::string SelfTestReport::text() const {
  std::ostringstream out;
  int failed = 0;
  for (const SelfTestCheck& c : checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
    if (!c.pass) ++failed;
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

SelfTestReport run_selftest() {
  SelfTestReport report;
  const std::pair<const char*, std::function<SelfTestCheck()>> suite[] = {
      {"erfc reflection", erfc_reflection},
      {"erfc conjugation", erfc_conjugation},
      {"h jump", h_jump},
      {"Mittag-Leffler lambda = 1", ml_is_exp},
      {"chart round trip", chart_round_trip},
      {"saddle data", saddle_data},
      {"window phase trend", window_phase_trend},
      {"small zero clouds", small_zero_clouds},
      {"F_n closed form", fn_identity},
  };
  for (const auto& [name, run] : suite) report.checks.push_back(guarded(name, run));
  return report;
}

}  // namespace psums
