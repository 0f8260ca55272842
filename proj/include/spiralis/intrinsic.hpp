#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "spiralis/errors.hpp"
#include "spiralis/geometry.hpp"

namespace spiralis {

using RealFunction = std::function<double(double)>;

/// Curve given by curvature as a function of arc length s >= 0.
///
/// `theta`, `rho` and `drho_ds` are optional closed forms a family may
/// register; evaluation falls back to quadrature (for theta) or 1/kappa
/// (for rho) when absent. `theta` must be relative to the domain start,
/// i.e. theta(s_lo) = 0.
struct ArcLengthForm {
  RealFunction kappa;
  RealFunction theta;
  RealFunction rho;
  RealFunction drho_ds;
};

/// Curve given by radius of curvature as a function of tangent angle,
/// rho(psi) > 0 on the domain.
struct TangentAngleForm {
  RealFunction rho;
  RealFunction drho_dtheta;
};

struct CurveSample {
  double s = 0.0;      // arc length from the domain start
  double x = 0.0;      // world coordinates
  double y = 0.0;
  double theta = 0.0;  // world tangent angle (pose heading included)
  double kappa = 0.0;
};

struct CurveSamples {
  std::vector<CurveSample> rows;
};

/// A planar curve in natural (intrinsic) form plus a placement pose.
///
/// The curve parameter is arc length for ArcLengthForm and tangent angle for
/// TangentAngleForm; the tangent angle relative to the pose heading is zero
/// at the domain's lower bound in both cases. Instances are immutable and
/// safe to share between threads.
class IntrinsicCurve {
 public:
  IntrinsicCurve(ArcLengthForm form, Interval domain, Pose pose = {});
  IntrinsicCurve(TangentAngleForm form, Interval domain, Pose pose = {});

  const Interval& domain() const { return domain_; }
  const Pose& pose() const { return pose_; }
  bool is_arclength() const {
    return std::holds_alternative<ArcLengthForm>(form_);
  }

  /// Curvature at the native parameter (1/rho for tangent-angle curves).
  double curvature_at(double t) const;

  /// Radius of curvature at the native parameter.
  double radius_at(double t) const;

  /// d(rho)/ds at the native parameter, when the family registered the
  /// closed form (for tangent-angle curves derived as rho'(psi)/rho(psi)).
  std::optional<double> radius_derivative_at(double t) const;

  /// Tangent angle relative to the pose heading; zero at the domain start.
  /// For arc-length curves this is the registered closed form or the
  /// quadrature integral of curvature at the given tolerance.
  double tangent_angle_at(double t, double tol = 1e-10) const;

  /// World position at the native parameter.
  Vec2 position_at(double t, double tol = 1e-10) const;

  /// n rows at uniform native-parameter steps across the domain. Positions
  /// and (for tangent-angle curves) the arc-length column are accumulated
  /// per step, so per-row quadrature error does not grow with the distance
  /// from the domain start.
  CurveSamples sample(int n, double tol = 1e-10) const;

 private:
  void check_in_domain(double t) const;

  std::variant<ArcLengthForm, TangentAngleForm> form_;
  Interval domain_;
  Pose pose_;
};

}  // namespace spiralis
