#include "spiralis/discrete.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace spiralis {

PolylineSpiral::PolylineSpiral(std::vector<Vec2> vertices_)
    : vertices(std::move(vertices_)) {
  if (vertices.size() < 2)
    throw InvalidParameter("polyline spiral: need at least two vertices");
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].x == vertices[i - 1].x && vertices[i].y == vertices[i - 1].y)
      throw InvalidParameter("polyline spiral: consecutive vertices coincide at index " +
                             std::to_string(i));
  }
}

ArcChain::ArcChain(std::vector<Arc> arcs_) : arcs(std::move(arcs_)) {
  if (arcs.empty()) throw InvalidParameter("arc chain: need at least one arc");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!(arcs[i].radius > 0.0))
      throw InvalidParameter("arc chain: radius must be positive");
    if (i > 0 && distance(arc_end(arcs[i - 1]), arc_start(arcs[i])) > 1e-9)
      throw InvalidParameter("arc chain: gap between arcs " + std::to_string(i - 1) +
                             " and " + std::to_string(i));
  }
}

PolylineSpiral theodorus(int n) {
  if (n < 1) throw InvalidParameter("theodorus: need n >= 1");
  std::vector<Vec2> vertices;
  vertices.reserve(n + 1);
  Vec2 p{1.0, 0.0};
  vertices.push_back(p);
  for (int k = 0; k < n; ++k) {
    const double r = norm(p);
    p = p + Vec2{-p.y / r, p.x / r};  // unit step, counterclockwise
    vertices.push_back(p);
  }
  return PolylineSpiral(std::move(vertices));
}

PolylineSpiral spirangle(int k, int turns, double step) {
  if (k < 3) throw InvalidParameter("spirangle: need k >= 3 directions");
  if (turns < 1) throw InvalidParameter("spirangle: need turns >= 1");
  if (!(step > 0.0)) throw InvalidParameter("spirangle: step must be positive");

  std::vector<Vec2> vertices;
  vertices.reserve(static_cast<std::size_t>(k) * turns + 1);
  Vec2 p{0.0, 0.0};
  vertices.push_back(p);
  for (int i = 0; i < k * turns; ++i) {
    const double length = step * (1.0 + i / k);
    p = p + length * unit_vector(2.0 * kPi * i / k);
    vertices.push_back(p);
  }
  return PolylineSpiral(std::move(vertices));
}

ArcChain golden_spiral(int quarter_turns, double r0) {
  if (quarter_turns < 1) throw InvalidParameter("golden spiral: need quarter_turns >= 1");
  if (!(r0 > 0.0)) throw InvalidParameter("golden spiral: r0 must be positive");

  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  std::vector<Arc> arcs;
  arcs.reserve(quarter_turns);

  double radius = r0;
  double angle = 0.0;
  Vec2 center{0.0, 0.0};
  for (int i = 0; i < quarter_turns; ++i) {
    arcs.push_back({center, radius, angle, 0.5 * kPi});
    const Vec2 end = arc_end(arcs.back());
    const double next_radius = radius * phi;
    const double next_angle = angle + 0.5 * kPi;
    // Place the next center so its arc starts exactly where this one ends;
    // with the golden ratio step this lands on the shared corner of the
    // nested golden rectangles.
    center = end - next_radius * unit_vector(next_angle);
    radius = next_radius;
    angle = next_angle;
  }
  return ArcChain(std::move(arcs));
}

}  // namespace spiralis
