#pragma once

#include <variant>

#include "spiralis/families.hpp"
#include "spiralis/geometry.hpp"
#include "spiralis/intrinsic.hpp"

namespace spiralis {

struct PseudospiralTransition {
  double m = -1.0;  // must be < 0 so the segment starts with zero curvature
};

struct SuperspiralTransition {
  double a = 1.0;
  double b = 1.0;
  double c = 2.0;
};

/// Line-to-circle transition request. The budget is total arc length for
/// pseudospirals and total tangent angle for superspirals.
struct TransitionSpec {
  std::variant<PseudospiralTransition, SuperspiralTransition> family;
  double target_end_curvature = 1.0;  // 1/r of the implied circle
  double budget = 1.0;
};

struct TransitionDiagnostics {
  double curvature_gap = 0.0;  // |kappa(end) - target|
  double tangent_gap = 0.0;    // angle between join tangent and circle tangent
  double position_gap = 0.0;   // | |join - center| - radius |
};

struct TransitionResult {
  IntrinsicCurve segment;
  double coefficient = 0.0;  // solved k0 (pseudospiral) or scale (superspiral)
  Vec2 join_point;
  double join_tangent = 0.0;
  Vec2 circle_center;
  double circle_radius = 0.0;
  TransitionDiagnostics diagnostics;
};

/// Fits the family's free coefficient so the segment, starting at the
/// origin with heading 0 on the x-axis line, reaches the target curvature
/// exactly at the budget end. The circle is an output: its center sits one
/// radius along the left normal at the join (positive curvature turns
/// left), which makes the circle-side contact G2 by construction.
///
/// Pseudospirals need m < 0 (kappa(0) = 0 then); the end condition
/// k0 S^-m = kappa1 gives k0 directly. Superspirals keep their shape
/// parameters and solve a homothety factor from scale * rho(budget) =
/// 1/kappa1; note rho(0) = 1 pins the start curvature of the scaled curve
/// at 1/scale > 0, so the line-side contact is G1, not G2 (see verify_g2).
///
/// Throws InfeasibleSpec when the family cannot satisfy the request.
TransitionResult fit_line_to_circle(const TransitionSpec& spec, double tol = 1e-12);

/// Checks a transition result for G2 contact at the stated tolerance:
/// (a) segment start curvature <= tol and start heading 0 within tol,
/// (b) join point one radius from the center within tol,
/// (c) join tangent perpendicular to the radius vector within tol,
/// (d) end curvature equal to 1/radius within tol.
bool verify_g2(const TransitionResult& result, double tol);

}  // namespace spiralis
