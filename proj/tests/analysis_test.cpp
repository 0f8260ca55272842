#include "spiralis/analysis.hpp"

#include <cmath>

#include <doctest.h>

#include "spiralis/families.hpp"

using namespace spiralis;

namespace {

CurveSamples synthetic_samples(const std::vector<double>& kappas) {
  CurveSamples s;
  for (std::size_t i = 0; i < kappas.size(); ++i)
    s.rows.push_back({static_cast<double>(i), 0.0, 0.0, 0.0, kappas[i]});
  return s;
}

}  // namespace

TEST_CASE("monotonicity: constant, increasing, decreasing") {
  auto constant = check_monotone_curvature(synthetic_samples({1.0, 1.0, 1.0, 1.0}));
  CHECK(constant.monotone);
  CHECK(constant.direction == MonotoneDirection::Constant);
  CHECK_FALSE(constant.first_violation_s.has_value());

  auto inc = check_monotone_curvature(synthetic_samples({0.0, 0.5, 1.0, 2.0}));
  CHECK(inc.monotone);
  CHECK(inc.direction == MonotoneDirection::Increasing);

  auto dec = check_monotone_curvature(synthetic_samples({2.0, 1.0, 0.5, 0.25}));
  CHECK(dec.monotone);
  CHECK(dec.direction == MonotoneDirection::Decreasing);
}

TEST_CASE("monotonicity: sine-perturbed sequence reports the first descent") {
  // kappa = s + 0.2 sin(3 s) on integers: first decrease lands at s = 5
  // (since sin makes 4->5 dip); scan for it the brute-force way.
  std::vector<double> kappas;
  for (int i = 0; i <= 10; ++i) kappas.push_back(i + 3.0 * std::sin(2.2 * i));
  int expected = -1;
  for (std::size_t i = 1; i < kappas.size(); ++i) {
    if (kappas[i] < kappas[i - 1]) {
      expected = static_cast<int>(i);
      break;
    }
  }
  REQUIRE(expected > 0);

  const auto report = check_monotone_curvature(synthetic_samples(kappas));
  CHECK_FALSE(report.monotone);
  CHECK(report.direction == MonotoneDirection::None);
  REQUIRE(report.first_violation_s.has_value());
  CHECK_EQ(*report.first_violation_s, static_cast<double>(expected));
  CHECK(report.max_violation > 0.0);
}

TEST_CASE("monotonicity: noise below tol is ignored") {
  const auto report = check_monotone_curvature(
      synthetic_samples({1.0, 1.0 + 1e-14, 1.0 - 1e-14, 1.0}), 1e-12);
  CHECK(report.monotone);
  CHECK(report.direction == MonotoneDirection::Constant);
}

TEST_CASE("monotonicity needs three rows") {
  CHECK_THROWS_AS(check_monotone_curvature(synthetic_samples({1.0, 2.0})),
                  InsufficientSamples);
}

TEST_CASE("LCG of an LAC is a line with slope alpha") {
  const auto curve = make_lac({2.0, 2.0, 0.0}, {0.1, 4.0});
  const auto points = compute_lcg(curve, 100);
  const auto fit = fit_lcg_line(points);
  CHECK(std::fabs(fit.slope - 2.0) < 1e-3);
  CHECK(fit.max_residual < 1e-9);
  CHECK(fit.r_squared > 0.999999);
}

TEST_CASE("LCG slope recovers alpha across the LAC family") {
  for (double alpha : {-1.0, 1.0, 2.0, 3.0}) {
    const auto curve = make_lac({alpha, 1.0, 0.05}, {0.1, 4.0});
    const auto fit = fit_lcg_line(compute_lcg(curve, 200));
    CHECK(std::fabs(fit.slope - alpha) < 1e-3);
    CHECK(fit.max_residual < 1e-6);
  }
}

TEST_CASE("logarithmic spiral has LCG slope 1 via both constructions") {
  const auto via_lac = make_lac({1.0, 1.0, 0.2}, {0.1, 4.0});
  CHECK(std::fabs(fit_lcg_line(compute_lcg(via_lac, 100)).slope - 1.0) < 1e-3);

  const auto via_pseudospiral = make_pseudospiral({1.3, 1.0}, {0.1, 4.0});
  CHECK(std::fabs(fit_lcg_line(compute_lcg(via_pseudospiral, 100)).slope - 1.0) < 1e-3);
}

TEST_CASE("pseudospiral LCG slope is 1/m") {
  for (double m : {-1.0, 0.5, 2.0}) {
    const auto curve = make_pseudospiral({1.0, m}, {0.1, 4.0});
    const auto fit = fit_lcg_line(compute_lcg(curve, 150));
    CHECK(std::fabs(fit.slope - 1.0 / m) < 1e-3);
    CHECK(fit.max_residual < 1e-6);
  }
}

TEST_CASE("a circle has no LCG") {
  const auto circle = make_lac({1.0, 0.0, 1.0}, {0.0, 2.0});
  CHECK_THROWS_AS(compute_lcg(circle, 50), DegenerateRho);
}

TEST_CASE("superspiral LCG exists (decreasing radius) and is not LAC-linear") {
  const auto curve = make_superspiral({1.0, 1.0, 2.0}, {0.2, 3.0});
  const auto fit = fit_lcg_line(compute_lcg(curve, 100));
  CHECK(fit.max_residual > 1e-6);
}

TEST_CASE("GLAC with a shift is generally off the LAC line") {
  // alpha = 2: the shifted radius sqrt(s+1) + 1/2 has a curved LCG.
  const auto shifted =
      make_glac({2.0, 1.0, 1.0, 0.5, ShiftKind::RadiusShift}, {0.1, 4.0});
  const auto fit = fit_lcg_line(compute_lcg(shifted, 100));
  CHECK(fit.max_residual > 1e-6);

  // alpha = 1 is the degenerate exception: shifting a linear radius gives
  // another linear radius, i.e. an exact LAC again.
  const auto absorbed =
      make_glac({1.0, 1.0, 1.0, 0.5, ShiftKind::RadiusShift}, {0.1, 4.0});
  const auto fit_absorbed = fit_lcg_line(compute_lcg(absorbed, 100));
  CHECK(fit_absorbed.max_residual < 1e-9);
  CHECK(std::fabs(fit_absorbed.slope - 1.0) < 1e-3);
}

TEST_CASE("LCG stretch must stay inside the curve domain") {
  const auto curve = make_lac({2.0, 1.0, 0.1}, {0.5, 4.0});
  CHECK_THROWS_AS(compute_lcg(curve, 50, {0.0, 4.0}), OutOfDomain);
  CHECK_NOTHROW(compute_lcg(curve, 50, {1.0, 3.0}));
}

TEST_CASE("LCG from an external sample table via finite differences") {
  const auto curve = make_lac({2.0, 2.0, 0.0}, {0.5, 4.0});
  const auto fit = fit_lcg_line(compute_lcg(curve.sample(400, 1e-11)));
  CHECK(std::fabs(fit.slope - 2.0) < 1e-2);  // FD noise allows a looser gate
}

TEST_CASE("line fit: two points interpolate exactly") {
  const auto fit = fit_lcg_line({{0.0, 1.0}, {2.0, 5.0}});
  CHECK(std::fabs(fit.slope - 2.0) < 1e-15);
  CHECK(std::fabs(fit.intercept - 1.0) < 1e-15);
  CHECK_EQ(fit.max_residual, 0.0);
  CHECK_EQ(fit.r_squared, 1.0);
}

TEST_CASE("line fit guards") {
  CHECK_THROWS_AS(fit_lcg_line({{1.0, 1.0}}), InsufficientSamples);
  CHECK_THROWS_AS(fit_lcg_line({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}}),
                  DegenerateAbscissa);
}
