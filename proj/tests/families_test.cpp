#include "spiralis/families.hpp"

#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "spiralis/analysis.hpp"
#include "spiralis/hypergeom.hpp"

using namespace spiralis;

TEST_CASE("pseudospiral m = 0 is the unit circle") {
  const auto curve = make_pseudospiral({1.0, 0.0}, {0.0, kPi});
  const Vec2 half_turn = curve.position_at(kPi, 1e-12);
  CHECK(std::fabs(half_turn.x - 0.0) < 1e-9);
  CHECK(std::fabs(half_turn.y - 2.0) < 1e-9);
}

TEST_CASE("pseudospiral m = -1 reproduces kappa(s) = s and the Fresnel position") {
  const auto curve = make_pseudospiral({1.0, -1.0}, {0.0, 1.0});
  CHECK_EQ(curve.curvature_at(0.5), 0.5);
  const Vec2 p = curve.position_at(1.0, 1e-12);
  CHECK(std::fabs(p.x - oracle::frozen::kFresnelCos) < 1e-9);
  CHECK(std::fabs(p.y - oracle::frozen::kFresnelSin) < 1e-9);
}

TEST_CASE("pseudospiral construction guards") {
  CHECK_THROWS_AS(make_pseudospiral({0.0, 1.0}, {0.1, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(make_pseudospiral({-1.0, 1.0}, {0.1, 1.0}), InvalidParameter);
  // m >= 1 needs s_lo > 0; 0 < m < 1 does not.
  CHECK_THROWS_AS(make_pseudospiral({1.0, 1.0}, {0.0, 1.0}), InvalidDomain);
  CHECK_THROWS_AS(make_pseudospiral({1.0, 2.0}, {0.0, 1.0}), InvalidDomain);
  CHECK_NOTHROW(make_pseudospiral({1.0, 0.5}, {0.0, 1.0}));
}

TEST_CASE("closed form m = 0 reduces to the unit circle") {
  const Vec2 p = pseudospiral_closed_form({1.0, 0.0}, kPi / 2.0);
  CHECK(std::fabs(p.x - 1.0) < 1e-14);
  CHECK(std::fabs(p.y - 1.0) < 1e-14);
}

TEST_CASE("closed form m = -1 matches the Fresnel oracle") {
  const Vec2 p = pseudospiral_closed_form({1.0, -1.0}, 1.0);
  CHECK(std::fabs(p.x - oracle::frozen::kFresnelCos) < 1e-12);
  CHECK(std::fabs(p.y - oracle::frozen::kFresnelSin) < 1e-12);
}

TEST_CASE("closed form agrees with the quadrature route across exponents") {
  // Includes the log-spiral trig form (m = 1) and the logarithmic limit
  // branch (m = 2); the quadrature route is the independent check.
  for (double m : {-1.0, 0.0, 0.5, 2.0, 1.0, -0.5, 3.0}) {
    const double s_lo = m >= 1.0 ? 0.25 : 0.0;
    const PseudospiralParams p{1.0, m};
    const auto curve = make_pseudospiral(p, {s_lo, 3.0});
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
      const Vec2 via_quad = curve.position_at(s, 1e-12);
      const Vec2 via_series = pseudospiral_closed_form_segment(p, s_lo, s);
      CHECK(std::fabs(via_quad.x - via_series.x) < 1e-8);
      CHECK(std::fabs(via_quad.y - via_series.y) < 1e-8);
    }
  }
}

TEST_CASE("closed form rejects the excluded exponents") {
  CHECK(pseudospiral_m_excluded(1.5));
  CHECK(pseudospiral_m_excluded(4.0 / 3.0));
  CHECK(pseudospiral_m_excluded(1.25));
  CHECK_FALSE(pseudospiral_m_excluded(2.0));
  CHECK_FALSE(pseudospiral_m_excluded(0.5));
  CHECK_THROWS_AS(pseudospiral_closed_form({1.0, 1.5}, 1.0), InvalidParameter);
  CHECK_THROWS_AS(pseudospiral_closed_form({1.0, 1.0}, 0.0), DomainError);
}

TEST_CASE("LAC with constant radius is a circle") {
  const auto curve = make_lac({1.0, 0.0, 1.0}, {0.0, kPi});
  const Vec2 p = curve.position_at(kPi, 1e-12);
  CHECK(std::fabs(p.x) < 1e-9);
  CHECK(std::fabs(p.y - 2.0) < 1e-9);
  CHECK_EQ(curve.curvature_at(1.0), 1.0);
}

TEST_CASE("LAC alpha = -1 has curvature linear in arc length") {
  const auto curve = make_lac({-1.0, 0.3, 0.1}, {0.0, 4.0});
  for (double s : {0.0, 1.0, 2.5, 4.0})
    CHECK(std::fabs(curve.curvature_at(s) - (0.3 * s + 0.1)) < 1e-15);
}

TEST_CASE("LAC alpha = 0 is the exponential-radius spiral") {
  const auto curve = make_lac({0.0, 2.0, 0.5}, {0.0, 2.0});
  for (double s : {0.0, 0.7, 2.0}) {
    CHECK(std::fabs(curve.radius_at(s) - 2.0 * std::exp(0.5 * s)) < 1e-14);
    CHECK(std::fabs(curve.curvature_at(s) - std::exp(-0.5 * s) / 2.0) < 1e-15);
  }
  // Closed-form tangent angle against direct quadrature of kappa.
  const double direct =
      oracle::simpson([](double u) { return std::exp(-0.5 * u) / 2.0; }, 0.0, 1.5, 4000);
  CHECK(std::fabs(curve.tangent_angle_at(1.5) - direct) < 1e-10);
}

TEST_CASE("LAC closed-form tangent angle matches quadrature for general alpha") {
  for (double alpha : {-2.0, -1.0, 0.5, 1.0, 2.0, 3.0}) {
    const LacParams p{alpha, 1.0, 0.2};
    const auto curve = make_lac(p, {0.0, 2.0});
    auto kappa = [&](double u) { return std::pow(1.0 * u + 0.2, -1.0 / alpha); };
    const double direct = oracle::simpson(kappa, 0.0, 1.7, 4000);
    CHECK(std::fabs(curve.tangent_angle_at(1.7) - direct) < 1e-9);
  }
}

TEST_CASE("LAC positivity validation") {
  CHECK_THROWS_AS(make_lac({1.0, -1.0, 1.0}, {0.0, 2.0}), InvalidParameter);
  CHECK_THROWS_AS(make_lac({0.0, -2.0, 0.5}, {0.0, 2.0}), InvalidParameter);
  CHECK_THROWS_AS(make_lac({2.0, 0.0, -1.0}, {0.0, 2.0}), InvalidParameter);
}

TEST_CASE("GLAC with zero shift reduces to the LAC sample table exactly") {
  const Interval dom{0.1, 4.0};
  const auto lac = make_lac({2.0, 1.0, 0.3}, dom);
  GlacParams g{2.0, 1.0, 0.3, 0.0, ShiftKind::RadiusShift};
  const auto glac = make_glac(g, dom);
  const auto a = lac.sample(50, 1e-12).rows;
  const auto b = glac.sample(50, 1e-12).rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::fabs(a[i].x - b[i].x) < 1e-10);
    CHECK(std::fabs(a[i].y - b[i].y) < 1e-10);
    CHECK_EQ(a[i].kappa, b[i].kappa);
  }

  // Curvature shift with c2 = 0 is the LAC with the exponent sign flipped.
  GlacParams gc{2.0, 1.0, 0.3, 0.0, ShiftKind::CurvatureShift};
  const auto glac_c = make_glac(gc, dom);
  for (double s : {0.1, 1.0, 3.0})
    CHECK(std::fabs(glac_c.curvature_at(s) - std::pow(1.0 * s + 0.3, 0.5)) < 1e-15);
}

TEST_CASE("GLAC radius shift evaluates per definition") {
  GlacParams g{1.0, 1.0, 1.0, 0.5, ShiftKind::RadiusShift};
  const auto curve = make_glac(g, {0.0, 2.0});
  CHECK_EQ(curve.radius_at(1.0), 2.5);
  CHECK_EQ(curve.curvature_at(1.0), 1.0 / 2.5);
  const auto rows = curve.sample(5, 1e-11).rows;
  CHECK(std::fabs(rows[2].kappa - 0.4) < 1e-15);
}

TEST_CASE("GLAC positions agree with LAC when the shift is absorbed") {
  // rho = (s + 1)^1 + 0.5 is also the LAC rho = (s + 1.5): the GLAC route
  // runs nested quadrature, the LAC route a closed form.
  GlacParams g{1.0, 1.0, 1.0, 0.5, ShiftKind::RadiusShift};
  const auto glac = make_glac(g, {0.0, 3.0});
  const auto lac = make_lac({1.0, 1.0, 1.5}, {0.0, 3.0});
  for (double s : {0.5, 1.5, 3.0}) {
    const Vec2 a = glac.position_at(s, 1e-11);
    const Vec2 b = lac.position_at(s, 1e-12);
    CHECK(std::fabs(a.x - b.x) < 1e-9);
    CHECK(std::fabs(a.y - b.y) < 1e-9);
  }
}

TEST_CASE("GLAC validation") {
  CHECK_THROWS_AS(make_glac({0.0, 1.0, 1.0, 0.1, ShiftKind::RadiusShift}, {0.0, 1.0}),
                  InvalidParameter);
  // Curvature shifted below zero somewhere on the domain.
  CHECK_THROWS_AS(
      make_glac({-1.0, 1.0, 0.5, -1.5, ShiftKind::CurvatureShift}, {0.0, 2.0}),
      InvalidParameter);
}

TEST_CASE("superspiral radius: value at zero, ln 2 identity, positivity") {
  const SuperspiralParams p{1.0, 1.0, 2.0};
  CHECK_EQ(superspiral_radius(p, 0.0), 1.0);
  CHECK(std::fabs(superspiral_radius(p, 1.0) - oracle::frozen::kLn2) < 1e-12);

  const auto curve = make_superspiral(p, {0.0, 3.0});
  CHECK_EQ(curve.curvature_at(0.0), 1.0);
  CHECK(std::fabs(curve.radius_at(1.0) - oracle::frozen::kLn2) < 1e-12);
}

TEST_CASE("superspiral with vanishing a approximates the unit circle") {
  const auto curve = make_superspiral({1e-12, 1.0, 2.0}, {0.0, kPi});
  const Vec2 p = curve.position_at(kPi / 2.0, 1e-10);
  CHECK(std::fabs(p.x - 1.0) < 1e-6);
  CHECK(std::fabs(p.y - 1.0) < 1e-6);
}

TEST_CASE("superspiral parameter validation") {
  CHECK_THROWS_AS(make_superspiral({0.5, 1.5, 1.0}, {0.0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(make_superspiral({0.0, 1.0, 2.0}, {0.0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(make_superspiral({1.0, 1.0, 2.0}, {-0.5, 1.0}), InvalidDomain);
}

TEST_CASE("superspiral radius is nonincreasing along the curve") {
  const auto curve = make_superspiral({0.5, 1.0, 1.5}, {0.0, 8.0});
  double prev = curve.radius_at(0.0);
  for (double psi = 0.25; psi <= 8.0; psi += 0.25) {
    const double rho = curve.radius_at(psi);
    CHECK(rho > 0.0);
    CHECK(rho <= prev + 1e-14);
    prev = rho;
  }
}

TEST_CASE("pseudospiral and LAC describe the same curvature through alpha = 1/m") {
  for (double m : {-1.0, 0.5, 2.0}) {
    const double alpha_ps = 1.7;
    const PseudospiralParams ps{alpha_ps, m};
    const LacParams lac{1.0 / m, std::pow(alpha_ps, 1.0 / m), 0.0};
    const auto curve_ps = make_pseudospiral(ps, {0.1, 5.0});
    const auto curve_lac = make_lac(lac, {0.1, 5.0});
    for (int i = 0; i <= 100; ++i) {
      const double s = 0.1 + (5.0 - 0.1) * i / 100;
      CHECK(std::fabs(curve_ps.curvature_at(s) - curve_lac.curvature_at(s)) < 1e-10);
    }
  }
}

TEST_CASE("every family produces monotone curvature samples") {
  std::vector<IntrinsicCurve> curves;
  for (double alpha : {0.5, 1.0, 2.0})
    for (double m : {-1.0, 0.5, 2.0})
      curves.push_back(make_pseudospiral({alpha, m}, {0.1, 3.0}));
  for (double alpha : {-1.0, 1.0, 2.0, 3.0})
    curves.push_back(make_lac({alpha, 1.0, 0.1}, {0.0, 3.0}));
  curves.push_back(make_lac({0.0, 1.0, 0.3}, {0.0, 3.0}));
  for (auto kind : {ShiftKind::RadiusShift, ShiftKind::CurvatureShift})
    for (double c2 : {0.25, 0.5})
      curves.push_back(make_glac({2.0, 1.0, 1.0, c2, kind}, {0.0, 3.0}));
  curves.push_back(make_superspiral({0.5, 1.0, 1.5}, {0.0, 4.0}));
  curves.push_back(make_superspiral({1.0, 1.0, 2.0}, {0.0, 4.0}));
  curves.push_back(make_superspiral({2.0, 0.5, 3.0}, {0.0, 4.0}));

  for (const auto& curve : curves) {
    const auto samples = curve.sample(201, 1e-10);
    const auto report = check_monotone_curvature(samples, 1e-12);
    CHECK(report.monotone);
  }
}
