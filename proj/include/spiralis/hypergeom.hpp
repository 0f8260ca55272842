#pragma once

#include "spiralis/errors.hpp"

namespace spiralis {

/// Outcome of a truncated hypergeometric series evaluation.
struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double truncation_estimate = 0.0;  // absolute, from the last two terms
  bool converged = false;
};

/// Hard cap on series length before NonConvergence is raised.
inline constexpr int kMaxSeriesTerms = 10000;

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
/// Total on n >= 0; overflow follows IEEE (returns inf).
double pochhammer(double a, int n);

/// Generalized hypergeometric 1F2(a; b, c; z) by direct summation.
///
/// Terms are added until two consecutive magnitudes fall below
/// tol * max(1, |partial sum|); the pair rule guards against the
/// near-cancellation stalls of alternating series.
///
/// Throws InvalidParameter if b or c is a nonpositive integer, and
/// NonConvergence if kMaxSeriesTerms is exhausted.
SeriesResult hyp1f2(double a, double b, double c, double z, double tol);

/// Gauss hypergeometric 2F1(a, b; c; z) for z <= 0.
///
/// The raw series is summed for small |z|; for z <= -1/2 the Pfaff
/// transformation 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)) maps the
/// argument into [1/3, 1), where the series converges geometrically. This is
/// the only continuation needed on the z <= 0 half-line.
///
/// Throws DomainError for z > 0, InvalidParameter for nonpositive-integer c,
/// NonConvergence on cap.
SeriesResult hyp2f1(double a, double b, double c, double z, double tol);

/// True iff c > b > 0 and a > 0: the sufficient condition for
/// 2F1(a, b; c; -psi) to be completely monotone in psi >= 0.
bool validate_superspiral_params(double a, double b, double c);

}  // namespace spiralis
