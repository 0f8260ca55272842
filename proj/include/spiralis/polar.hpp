#pragma once

#include "spiralis/discrete.hpp"
#include "spiralis/errors.hpp"
#include "spiralis/geometry.hpp"

namespace spiralis {

enum class PolarKind {
  Archimedean,  // rho = a phi
  Hyperbolic,   // rho = a / phi
  Fermat,       // rho = a sqrt(phi)
  Galilean,     // rho = a - b phi^2
  Lituus,       // rho = a / sqrt(phi)
  Parabolic,    // rho^2 = a^2 phi, nonnegative branch
  Cochleoid,    // rho = a sin(phi) / phi
};

/// Algebraic spiral in polar form. Coefficient b is used by the Galilean
/// spiral only. Hyperbolic and lituus domains must start above phi = 0;
/// the others at or above 0.
struct PolarSpiral {
  PolarSpiral(PolarKind kind, double a, Interval phi_domain);
  PolarSpiral(PolarKind kind, double a, double b, Interval phi_domain);

  PolarKind kind;
  double a;
  double b;
  Interval phi_domain;
};

/// Radius at the given polar angle; OutOfDomain outside phi_domain.
double polar_rho(const PolarSpiral& spiral, double phi);

/// n Cartesian points (rho cos phi, rho sin phi) at uniform phi steps.
PolylineSpiral polar_sample(const PolarSpiral& spiral, int n);

}  // namespace spiralis
