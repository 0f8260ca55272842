#pragma once

#include <functional>

#include "spiralis/errors.hpp"

namespace spiralis {

/// Outcome of an adaptive integration.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, summed over subintervals
  int subintervals_used = 0;
  bool converged = false;
};

/// Cap on the number of subintervals in the adaptive partition.
inline constexpr int kMaxSubintervals = 2000;

/// Adaptive Gauss-Kronrod integration of f over [lo, hi] with the G7-K15
/// pair. The subinterval with the largest Gauss-vs-Kronrod discrepancy is
/// bisected until the summed estimate meets max(abs_tol, rel_tol*|value|).
///
/// All nodes are interior, so integrable endpoint singularities (x^-1/2 and
/// the like) need no special casing; non-integrable ones exhaust the
/// subdivision cap instead. There is no series extrapolation: exponents
/// close to -1 (x^-0.9 and worse) can fool the discrepancy estimate, so
/// the supported singularity class is moderate integrable endpoint
/// singularities.
///
/// Tolerances below double-precision resolution are clamped to the
/// attainable roundoff floor (~50 eps times the integral of |f|), so a
/// request of, say, 1e-16 converges at that floor instead of subdividing
/// forever.
///
/// Throws InvalidInterval (lo > hi), NonFiniteEvaluation (f non-finite at a
/// node), NonConvergence (cap reached short of tolerance).
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol, double rel_tol);

}  // namespace spiralis
