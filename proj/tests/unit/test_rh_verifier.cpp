#include "fixtures.hpp"
#include "psums/rh_verifier.hpp"

#include <doctest.h>

using namespace psums;
using psums::testing::as_complex;
using psums::testing::oracle;
using psums::testing::rel_err;

namespace {
const Contour& exp_contour() {
  static const Contour c = model_contour(EntireFunctionModel::exp());
  return c;
}
}  // namespace

TEST_CASE("F_n by quadrature matches its closed form inside and outside") {
  const auto ex = EntireFunctionModel::exp();
  const auto rows = fn_explicit_check(ex, exp_contour(), {20}, interior_probes(exp_contour()));
  REQUIRE(rows.size() == 10);
  for (const ClosedFormRow& r : rows) {
    CHECK(r.inside);
    CHECK(r.relative_error < 1e-10);
  }
  const Complex outside(1.3, 0.4);
  const Complex q = F_n(ex, exp_contour(), 20, outside, 1e-12).value;
  CHECK(rel_err(q, F_n_closed_form(ex, exp_contour(), 20, outside)) < 1e-10);
}

TEST_CASE("G_n against the broken-line oracle") {
  const CauchyIntegralResult g = G_n(exp_contour(), 1.0, 100, 1.05, 1e-12);
  CHECK(std::abs(g.value - as_complex(oracle()["G_n100_z1.05"])) < 1e-9);
}

TEST_CASE("jumps across the contour equal the densities") {
  const auto ex = EntireFunctionModel::exp();
  for (const auto& checks : {jump_checks_F(ex, exp_contour(), 20, 1e-12), jump_checks_G(exp_contour(), 20, 1e-12),
                             jump_checks_P(exp_contour(), 20)}) {
    REQUIRE_FALSE(checks.empty());
    for (const JumpCheck& j : checks) {
      INFO(j.object << " at " << j.z0 << " residual " << j.residual);
      CHECK(j.pass);
    }
  }
}

TEST_CASE("P_n chart and closed forms agree") {
  const SaddleChart chart = build_chart(1.0);
  for (Complex z : {Complex(0.97, 0.05), Complex(1.04, -0.02), Complex(1.0, 0.08)}) {
    const PnValue p = P_n(chart, 64, z);
    CHECK(std::abs(p.chart_form - p.closed_form) <= 1e-10 * std::max(1.0, std::abs(p.closed_form)));
  }
}

TEST_CASE("Richardson halving removes a linear error") {
  const auto [v, err] = richardson_halving({Complex(2.0 + 0.1), Complex(2.0 + 0.05), Complex(2.0 + 0.025)});
  CHECK(std::abs(v - 2.0) < 1e-14);
  CHECK(err < 1e-13);
}

TEST_CASE("decay fits") {
  const std::vector<int> n{16, 32, 64, 128};
  std::vector<double> power, geometric;
  for (int k : n) {
    power.push_back(3.0 * std::pow(k, -0.5));
    geometric.push_back(2.0 * std::exp(-0.1 * k));
  }
  const DecayFit p = fit_power_law(n, power);
  CHECK(std::abs(p.fitted_slope + 0.5) < 1e-12);
  CHECK(p.fit_residual < 1e-12);
  const DecayFit g = fit_log_linear(n, geometric);
  CHECK(g.log_linear);
  CHECK(std::abs(g.fitted_slope + 0.1) < 1e-12);
  CHECK(monotone_trend({5.0, 4.0, 4.1, 3.0}));
  CHECK_FALSE(monotone_trend({5.0, 6.0, 7.0, 3.0}));
}

TEST_CASE("m decomposition at the real probe matches the oracle") {
  const auto ex = EntireFunctionModel::exp();
  const MDecomposition m = m_decomposition(ex, exp_contour(), 32, 1.02);
  CHECK(m.consistent);
  CHECK(std::abs(std::abs(m.m) - oracle()["m_abs_z1.02"]["32"].get<double>()) < 1e-6);
}

TEST_CASE("pipeline from F_n reproduces the window ratio") {
  const auto ex = EntireFunctionModel::exp();
  const auto rows = theorem1_pipeline(ex, exp_contour(), 64, {Complex(-0.5, -0.5)});
  REQUIRE(rows.size() == 1);
  const auto& want = oracle()["pipeline_exp_n64_w-0.5-0.5i"];
  CHECK(rel_err(rows[0].F, as_complex(want["F"])) < 1e-8);
  CHECK(rel_err(rows[0].ratio_from_F, as_complex(want["ratio"])) < 1e-8);
  CHECK(std::abs(rows[0].ratio_error - want["abs_error"].get<double>()) < 1e-8);
  CHECK(rows[0].path_agreement < 1e-10);
}

TEST_CASE("F_n minus G_n is small for the exponential") {
  const auto ex = EntireFunctionModel::exp();
  const DecayFit fit = fn_gn_agreement(ex, exp_contour(), {32, 64}, Complex(-0.5, 0.3));
  REQUIRE(fit.magnitudes.size() == 2);
  for (double m : fit.magnitudes) CHECK(m < 1e-6);
}

TEST_CASE("suite names") {
  CHECK(lemma_suite_from_string("2") == LemmaSuite::GOnGamma1);
  CHECK(lemma_suite_from_string("lemma5") == LemmaSuite::POnGamma1);
  CHECK(lemma_suite_from_string(to_string(LemmaSuite::Gamma2Tail)) == LemmaSuite::Gamma2Tail);
  CHECK_THROWS_AS(lemma_suite_from_string("7"), DomainError);
}

TEST_CASE("deformation of the contour leaves F_n unchanged") {
  const auto [a, b] = deformation_invariance(1.0, kPi / 3.0, 0.05, 0.1, 20, {0.4, 0.2});
  CHECK(a <= std::max(1e-10, 10.0 * b));
}
