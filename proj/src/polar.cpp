#include "spiralis/polar.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace spiralis {

namespace {

bool needs_positive_phi(PolarKind kind) {
  return kind == PolarKind::Hyperbolic || kind == PolarKind::Lituus;
}

}  // namespace

PolarSpiral::PolarSpiral(PolarKind kind_, double a_, Interval phi_domain_)
    : PolarSpiral(kind_, a_, 1.0, phi_domain_) {}

PolarSpiral::PolarSpiral(PolarKind kind_, double a_, double b_, Interval phi_domain_)
    : kind(kind_), a(a_), b(b_), phi_domain(phi_domain_) {
  if (!(a > 0.0)) throw InvalidParameter("polar spiral: coefficient a must be positive");
  if (kind == PolarKind::Galilean && !(b > 0.0))
    throw InvalidParameter("polar spiral: coefficient b must be positive");
  if (!(phi_domain.lo < phi_domain.hi))
    throw InvalidDomain("polar spiral: empty phi domain");
  if (needs_positive_phi(kind)) {
    if (!(phi_domain.lo > 0.0))
      throw InvalidDomain("polar spiral: this kind diverges at phi = 0; domain must "
                          "start above 0");
  } else if (phi_domain.lo < 0.0) {
    throw InvalidDomain("polar spiral: phi domain must start at or above 0");
  }
}

double polar_rho(const PolarSpiral& spiral, double phi) {
  const double slack = 1e-12 * std::fmax(1.0, std::fabs(spiral.phi_domain.hi));
  if (!spiral.phi_domain.contains(phi, slack))
    throw OutOfDomain("polar spiral: phi = " + std::to_string(phi) + " outside domain");

  switch (spiral.kind) {
    case PolarKind::Archimedean:
      return spiral.a * phi;
    case PolarKind::Hyperbolic:
      return spiral.a / phi;
    case PolarKind::Fermat:
      return spiral.a * std::sqrt(phi);
    case PolarKind::Galilean:
      return spiral.a - spiral.b * phi * phi;
    case PolarKind::Lituus:
      return spiral.a / std::sqrt(phi);
    case PolarKind::Parabolic:
      return std::sqrt(spiral.a * spiral.a * phi);
    case PolarKind::Cochleoid:
      return phi == 0.0 ? spiral.a : spiral.a * std::sin(phi) / phi;
  }
  throw InvalidParameter("polar spiral: unknown kind");
}

PolylineSpiral polar_sample(const PolarSpiral& spiral, int n) {
  if (n < 2) throw InvalidParameter("polar sample: need n >= 2");
  std::vector<Vec2> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) {
    double phi = spiral.phi_domain.lo + spiral.phi_domain.length() * i / (n - 1);
    if (i == n - 1) phi = spiral.phi_domain.hi;
    const double rho = polar_rho(spiral, phi);
    points.push_back({rho * std::cos(phi), rho * std::sin(phi)});
  }
  return PolylineSpiral(std::move(points));
}

}  // namespace spiralis
