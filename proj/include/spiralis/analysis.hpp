#pragma once

#include <optional>
#include <vector>

#include "spiralis/intrinsic.hpp"

namespace spiralis {

enum class MonotoneDirection { Increasing, Decreasing, Constant, None };

struct MonotonicityReport {
  bool monotone = false;
  MonotoneDirection direction = MonotoneDirection::None;
  std::optional<double> first_violation_s;  // present iff not monotone
  double max_violation = 0.0;               // largest opposing step
};

/// Classifies the kappa column of a sample table. Steps below tol in
/// magnitude count as flat (numerical noise); the first step exceeding tol
/// fixes the direction and any later opposing step breaks monotonicity,
/// with first_violation_s at the row where the opposing step lands.
/// Throws InsufficientSamples below 3 rows.
MonotonicityReport check_monotone_curvature(const CurveSamples& samples,
                                            double tol = 1e-12);

/// One point of the logarithmic curvature graph.
///
/// The vertical field is log(rho |ds/drho|): taking the magnitude keeps the
/// graph defined for curves with decreasing radius, and only moves the
/// intercept, never the slope.
struct LcgPoint {
  double log_rho = 0.0;
  double log_rho_ds_drho = 0.0;
};

struct LcgFit {
  double slope = 0.0;      // the alpha estimate
  double intercept = 0.0;  // the C estimate
  double max_residual = 0.0;
  double r_squared = 0.0;
};

/// n LCG points at uniform native-parameter steps over `stretch` (the full
/// curve domain by default; callers must keep singular endpoints out of the
/// stretch). Uses the family's registered radius derivative when present
/// and central finite differences on the radius callable otherwise.
/// Throws DegenerateRho when d(rho)/ds vanishes or changes sign on the
/// stretch (a circle has no LCG).
std::vector<LcgPoint> compute_lcg(const IntrinsicCurve& curve, int n);
std::vector<LcgPoint> compute_lcg(const IntrinsicCurve& curve, int n,
                                  Interval stretch);

/// LCG from an externally supplied sample table: rho = 1/kappa per row,
/// d(rho)/ds by central differences (one-sided at the ends).
std::vector<LcgPoint> compute_lcg(const CurveSamples& samples);

/// Ordinary least squares line through the LCG points. Throws
/// DegenerateAbscissa when every log_rho coincides.
LcgFit fit_lcg_line(const std::vector<LcgPoint>& points);

}  // namespace spiralis
