#pragma once

#include "spiralis/geometry.hpp"
#include "spiralis/intrinsic.hpp"

namespace spiralis {

/// Pseudospiral: rho = alpha * s^m, i.e. kappa = (1/alpha) s^-m.
/// m = 1 is the logarithmic spiral, m = -1 the Cornu spiral, m = 1/2 the
/// involute of a circle, m = 0 a circle of radius alpha.
struct PseudospiralParams {
  double alpha = 1.0;  // > 0
  double m = 0.0;
};

/// Log-aesthetic curve: rho^alpha = c0 s + c1 for alpha != 0, and the
/// exponential form rho = c0 e^(c1 s) for alpha = 0.
struct LacParams {
  double alpha = 1.0;
  double c0 = 0.0;
  double c1 = 1.0;
};

enum class ShiftKind { RadiusShift, CurvatureShift };

/// Generalized LAC: the LAC radius (or curvature) shifted by c2.
struct GlacParams {
  double alpha = 1.0;  // != 0
  double c0 = 0.0;
  double c1 = 1.0;
  double c2 = 0.0;
  ShiftKind shift_kind = ShiftKind::RadiusShift;
};

/// Superspiral: rho(psi) = 2F1(a, b; c; -psi), completely monotone when
/// c > b > 0 and a > 0.
struct SuperspiralParams {
  double a = 1.0;
  double b = 1.0;
  double c = 2.0;
};

/// Arc-length curve for rho = alpha s^m over s_domain. A closed-form
/// tangent angle is registered, so positions need only one quadrature
/// level. Domains with m >= 1 must start at s_lo > 0 (the tangent angle
/// diverges at s = 0 there); for 0 < m < 1 the curvature singularity at 0
/// is integrable and s_lo = 0 is allowed.
IntrinsicCurve make_pseudospiral(const PseudospiralParams& p, Interval s_domain,
                                 Pose pose = {});

/// Pseudospiral position without quadrature: the trig-log form for m = 1,
/// the 1F2 hypergeometric pair otherwise (with a logarithmic limit branch
/// for m = 2, where the generic y prefactor degenerates).
///
/// For m < 1 the returned value is the position measured from the natural
/// origin s = 0 in the frame with theta(0) = 0. For m >= 1 no such origin
/// exists and the value is an antiderivative, meaningful through
/// differences; use pseudospiral_closed_form_segment for positions.
///
/// Throws InvalidParameter when m makes a 1F2 denominator parameter a
/// nonpositive integer (the set m = 1 + 1/j, j >= 2).
Vec2 pseudospiral_closed_form(const PseudospiralParams& p, double s);

/// Chord from s_from to s_to expressed in the frame whose tangent angle is
/// zero at s_from: exactly what position_at of a curve starting at s_from
/// returns. Computed from pseudospiral_closed_form differences plus a
/// rotation; no quadrature.
Vec2 pseudospiral_closed_form_segment(const PseudospiralParams& p, double s_from,
                                      double s_to);

/// True iff the 1F2 closed form is unavailable for this exponent.
bool pseudospiral_m_excluded(double m);

/// Arc-length LAC curve. Closed-form tangent angle and radius derivative
/// are registered for every parameter case (power, log, exponential and
/// constant-radius circle).
IntrinsicCurve make_lac(const LacParams& p, Interval s_domain, Pose pose = {});

/// Generalized LAC. c2 = 0 reduces exactly to make_lac (constructor-level);
/// otherwise the tangent angle has no closed form and evaluation nests
/// quadrature.
IntrinsicCurve make_glac(const GlacParams& p, Interval s_domain, Pose pose = {});

/// Tangent-angle superspiral curve, optionally scaled by a homothety
/// factor (scale multiplies rho, hence all lengths).
IntrinsicCurve make_superspiral(const SuperspiralParams& p, Interval theta_domain,
                                Pose pose = {}, double scale = 1.0);

/// rho(psi) = 2F1(a, b; c; -psi) for the unscaled superspiral.
double superspiral_radius(const SuperspiralParams& p, double psi);

}  // namespace spiralis
