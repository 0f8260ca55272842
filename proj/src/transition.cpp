#include "spiralis/transition.hpp"

#include <cmath>
#include <string>

#include "spiralis/hypergeom.hpp"

namespace spiralis {

namespace {

TransitionResult finish(IntrinsicCurve segment, double coefficient,
                        double target_kappa, double tol) {
  const double t_end = segment.domain().hi;
  const Vec2 join = segment.position_at(t_end, tol);
  const double theta_join = segment.tangent_angle_at(t_end, tol);
  const double radius = 1.0 / target_kappa;
  const Vec2 center = join + radius * unit_vector(theta_join + 0.5 * kPi);

  TransitionDiagnostics diag;
  diag.curvature_gap = std::fabs(segment.curvature_at(t_end) - target_kappa);
  const Vec2 radial = join - center;
  diag.tangent_gap =
      std::fabs(dot(unit_vector(theta_join), radial) / norm(radial));
  diag.position_gap = std::fabs(norm(radial) - radius);

  return TransitionResult{std::move(segment), coefficient, join,      theta_join,
                          center,             radius,      diag};
}

}  // namespace

TransitionResult fit_line_to_circle(const TransitionSpec& spec, double tol) {
  const double kappa1 = spec.target_end_curvature;
  if (!(kappa1 > 0.0))
    throw InvalidParameter("transition: target curvature must be positive");
  if (!(spec.budget > 0.0))
    throw InvalidParameter("transition: budget must be positive");

  if (const auto* ps = std::get_if<PseudospiralTransition>(&spec.family)) {
    if (!(ps->m < 0.0))
      throw InfeasibleSpec("transition: pseudospiral needs m < 0 so the segment "
                           "leaves the line with zero curvature");
    const double S = spec.budget;
    // kappa(s) = k0 s^-m; end condition kappa(S) = kappa1.
    const double k0 = kappa1 * std::pow(S, ps->m);
    IntrinsicCurve segment =
        make_pseudospiral({1.0 / k0, ps->m}, Interval{0.0, S});
    return finish(std::move(segment), k0, kappa1, tol);
  }

  const auto& sp = std::get<SuperspiralTransition>(spec.family);
  const SuperspiralParams params{sp.a, sp.b, sp.c};
  if (!validate_superspiral_params(params.a, params.b, params.c))
    throw InfeasibleSpec("transition: superspiral parameters must satisfy "
                         "c > b > 0, a > 0");
  const double theta_end = spec.budget;
  const double rho_end = superspiral_radius(params, theta_end);
  if (!(rho_end > 0.0))
    throw InfeasibleSpec("transition: superspiral radius vanished inside the budget");
  const double scale = 1.0 / (kappa1 * rho_end);
  IntrinsicCurve segment =
      make_superspiral(params, Interval{0.0, theta_end}, Pose{}, scale);
  return finish(std::move(segment), scale, kappa1, tol);
}

bool verify_g2(const TransitionResult& result, double tol) {
  const IntrinsicCurve& segment = result.segment;

  // (a) G2 against the incoming line: zero start curvature and heading.
  const double start_kappa = std::fabs(segment.curvature_at(segment.domain().lo));
  const double start_heading = std::fabs(normalize_angle(segment.pose().heading));
  if (start_kappa > tol || start_heading > tol) return false;

  // (b) join lies on the circle.
  const Vec2 radial = result.join_point - result.circle_center;
  if (std::fabs(norm(radial) - result.circle_radius) > tol) return false;

  // (c) join tangent perpendicular to the radius vector.
  const Vec2 tangent = unit_vector(result.join_tangent);
  if (std::fabs(dot(tangent, radial) / norm(radial)) > tol) return false;

  // (d) curvature continuity into the circle.
  const double end_kappa = segment.curvature_at(segment.domain().hi);
  if (std::fabs(end_kappa - 1.0 / result.circle_radius) > tol) return false;

  return true;
}

}  // namespace spiralis
