#pragma once

#include <vector>

#include "spiralis/errors.hpp"
#include "spiralis/geometry.hpp"

namespace spiralis {

/// Spiral as a vertex chain. At least two vertices, consecutive ones
/// distinct.
struct PolylineSpiral {
  explicit PolylineSpiral(std::vector<Vec2> vertices);

  std::vector<Vec2> vertices;
};

/// One circular arc: sweep > 0 walks counterclockwise from start_angle.
struct Arc {
  Vec2 center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;
};

inline Vec2 arc_start(const Arc& a) {
  return a.center + a.radius * unit_vector(a.start_angle);
}
inline Vec2 arc_end(const Arc& a) {
  return a.center + a.radius * unit_vector(a.start_angle + a.sweep);
}

/// Spiral as a chain of arcs; each arc ends where the next one starts
/// (within 1e-9), radii positive.
struct ArcChain {
  explicit ArcChain(std::vector<Arc> arcs);

  std::vector<Arc> arcs;
};

/// Theodorus (square-root) spiral: P0 = (1, 0), each step adds a unit
/// segment perpendicular to the ray from the origin, so |Pk| = sqrt(k+1).
/// Returns n+1 vertices.
PolylineSpiral theodorus(int n);

/// Polygonal spiral over k fixed directions 2*pi*i/k. Segment i has length
/// step * (1 + floor(i/k)): lengths grow by `step` once per completed cycle
/// of directions. k * turns segments in total, starting at the origin.
PolylineSpiral spirangle(int k, int turns, double step);

/// Golden spiral as exact quarter-circle arcs with radii r0, r0*phi,
/// r0*phi^2, ... (phi the golden ratio), chained tangent-continuously.
ArcChain golden_spiral(int quarter_turns, double r0);

}  // namespace spiralis
