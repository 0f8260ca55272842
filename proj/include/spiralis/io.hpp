#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spiralis/discrete.hpp"
#include "spiralis/intrinsic.hpp"

namespace spiralis {

/// Shortest text that round-trips the double (17 significant digits).
std::string format_double(double v);

/// CSV with the fixed header `s,x,y,theta,kappa` and 17-digit values.
std::string to_csv(const CurveSamples& samples);

/// JSON equivalent of the CSV table.
nlohmann::ordered_json samples_to_json(const CurveSamples& samples);

/// Vertex chain as a sample table: s is cumulative chord length, theta the
/// outgoing segment direction (incoming for the last vertex), kappa 0.
CurveSamples samples_from_polyline(const PolylineSpiral& polyline);

/// Arc chain as a sample table with one row per arc boundary: s is
/// cumulative arc length, theta the tangent there, kappa the curvature of
/// the following arc (of the last arc for the final row).
CurveSamples samples_from_arcchain(const ArcChain& chain);

/// Standalone SVG 1.1 document with a single polyline, viewBox fitted to
/// the geometry with a 5% margin, y axis flipped once so the image matches
/// the mathematical orientation.
std::string to_svg_polyline(const std::vector<Vec2>& points, int width_px);

/// Same framing, with the chain rendered as a path of SVG arc segments.
std::string to_svg_arcs(const ArcChain& chain, int width_px);

}  // namespace spiralis
