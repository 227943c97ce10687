#include "fixtures.hpp"
#include "psums/partial_sums.hpp"
#include "psums/special_functions.hpp"

#include <doctest.h>

using namespace psums;
using psums::testing::as_complex;
using psums::testing::oracle;
using psums::testing::rel_err;

TEST_CASE("small sections") {
  const auto ex = EntireFunctionModel::exp();
  CHECK(rel_err(section_value(ex, 2, 1.0).value(), 2.5) < 1e-15);
  CHECK(rel_err(section_value(ex, 0, {3.0, 4.0}).value(), 1.0) == 0.0);
}

TEST_CASE("p_50(50) against a 60-digit sum") {
  const auto ex = EntireFunctionModel::exp();
  const SectionValue v = section_value_certified(ex, 50, 50.0);
  CHECK(v.relative_error <= 1e-10);
  const Complex scaled = std::exp(v.value.log() - 50.0);
  CHECK(rel_err(scaled, oracle()["exp_p50_at_50_over_e50"].get<double>()) < 1e-10);
}

TEST_CASE("section plus tail reproduces the function") {
  const auto ml = EntireFunctionModel::mittag_leffler(2.0);
  const Complex z(3.0, 1.0);
  const Complex sum = section_value(ml, 20, z).value() + section_tail_certified(ml, 20, z).value.value();
  CHECK(rel_err(sum, ml.evaluate(z)) < 1e-12);
}

TEST_CASE("cancellation forces the precision ladder upward") {
  const auto ex = EntireFunctionModel::exp();
  // p_150(-30) is e^{-30} to many digits while its largest term is near 1e12
  const SectionValue v = section_value_certified(ex, 150, -30.0);
  CHECK(v.precision != Precision::Double);
  CHECK(rel_err(v.value.value(), std::exp(-30.0)) < 1e-10);
  CHECK_THROWS_AS(section_value_certified(ex, 150, -30.0, Precision::Double), PrecisionExhausted);
}

TEST_CASE("Newman-Rivlin ratio at n = 100, w = 2i") {
  const RatioSample s = newman_rivlin_ratio(100, {0.0, 2.0});
  CHECK(rel_err(s.ratio, as_complex(oracle()["newman_rivlin_n100_w2i"])) < 1e-10);
  CHECK(newman_rivlin_ratio(100, 0.0).target == Complex(0.5, 0.0));
}

TEST_CASE("ESV ratio at lambda = 2, n = 128, w = -1") {
  const RatioSample s = esv_ratio(2.0, 128, -1.0);
  CHECK(rel_err(s.ratio, oracle()["esv_lambda2_n128_w-1"].get<double>()) < 1e-9);
  CHECK(esv_ratio(1.0, 64, 0.0).target == Complex(0.5, 0.0));
}

TEST_CASE("main-scaling ratio on the window") {
  const auto ex = EntireFunctionModel::exp();
  const auto rows = ratio_on_window(ex, make_window(ex, 1024, {Complex(-1.0, 1.0)}));
  const double bound = oracle()["theorem1_exp_n1024_w-1+i_abs_error"].get<double>();
  CHECK(rows[0].abs_error <= bound * (1.0 + 1e-6));
  // error shrinks with n at a fixed w
  const auto coarse = ratio_on_window(ex, make_window(ex, 64, {Complex(-1.0, 0.0)}));
  const auto fine = ratio_on_window(ex, make_window(ex, 256, {Complex(-1.0, 0.0)}));
  CHECK(fine[0].abs_error < coarse[0].abs_error);
  CHECK(ratio_on_window(ex, make_window(ex, 64, {Complex(0.5, 0.0)}))[0].outside_hypothesis);
}

TEST_CASE("zeros of 1 + z + z^2/2") {
  const auto ex = EntireFunctionModel::exp();
  const ZeroCloud c = zero_cloud(ex, 2, ZeroScaling::None);
  REQUIRE(c.zeros.size() == 2);
  CHECK(std::abs(c.zeros[0] - Complex(-1.0, -1.0)) < 1e-14);
  CHECK(std::abs(c.zeros[1] - Complex(-1.0, 1.0)) < 1e-14);
  CHECK(zero_cloud(ex, 1, ZeroScaling::None).zeros[0] == Complex(-1.0, 0.0));
}

TEST_CASE("zero cloud invariants") {
  const auto ex = EntireFunctionModel::exp();
  for (auto [n, scaling] : {std::pair{30, ZeroScaling::None}, std::pair{60, ZeroScaling::ByN}}) {
    const ZeroCloud c = zero_cloud(ex, n, scaling);
    CHECK(c.zeros.size() == std::size_t(n));
    CHECK(vieta_discrepancy(ex, c) < 1e-8);
    CHECK(conjugate_symmetry_error(c) < 1e-10);
    for (std::size_t k = 0; k < c.zeros.size(); ++k)
      CHECK(c.inclusion_radii[k] <= 1e-10 * std::max(1.0, std::abs(c.zeros[k])));
  }
  CHECK(zero_scaling_from_string("by_r_n") == ZeroScaling::ByRn);
  CHECK_THROWS_AS(zero_scaling_from_string("sideways"), DomainError);
}

TEST_CASE("parabola region") {
  CHECK(inside_parabola({0.0, 0.0}));
  CHECK_FALSE(inside_parabola({-2.0, 0.0}));
  CHECK(parabola_slack({-1.0, 0.0}) == 0.0);
  const ParabolaReport r = parabola_freeness(8);
  CHECK(r.violations == 0);
  CHECK(r.zeros_checked == 36);
  CHECK(std::abs(r.min_slack_per_n.at(5) - oracle()["parabola_min_slack_n6"].get<double>()) < 1e-10);
}

TEST_CASE("disk counts agree with the argument principle") {
  const auto ex = EntireFunctionModel::exp();
  for (double eps : {0.1, 0.35}) {
    const auto rows = disk_count(ex, {100}, eps);
    const ZeroCloud c = section_zeros(ex, 99, 100.0);
    auto p = [&](Complex z) { return section_value(ex, 99, 100.0 * z).value() * std::exp(-100.0); };
    CHECK(rows[0].count == argument_principle_count(p, 1.0, rows[0].radius));
    CHECK(c.zeros.size() == 99);
  }
  // wider disks hold at least as many zeros
  CHECK(disk_count(ex, {100}, 0.45)[0].count >= disk_count(ex, {100}, 0.1)[0].count);
  CHECK_THROWS_AS(disk_count(ex, {100}, 0.6), DomainError);
}
