#include "spiralis/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace spiralis {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const CurveSamples& samples) {
  std::string out = "s,x,y,theta,kappa\n";
  for (const auto& r : samples.rows) {
    out += format_double(r.s);
    out += ',';
    out += format_double(r.x);
    out += ',';
    out += format_double(r.y);
    out += ',';
    out += format_double(r.theta);
    out += ',';
    out += format_double(r.kappa);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json samples_to_json(const CurveSamples& samples) {
  nlohmann::ordered_json out;
  out["version"] = 1;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : samples.rows) {
    rows.push_back({{"s", r.s}, {"x", r.x}, {"y", r.y}, {"theta", r.theta},
                    {"kappa", r.kappa}});
  }
  out["rows"] = std::move(rows);
  return out;
}

CurveSamples samples_from_polyline(const PolylineSpiral& polyline) {
  const auto& v = polyline.vertices;
  CurveSamples out;
  out.rows.resize(v.size());
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += distance(v[i - 1], v[i]);
    const std::size_t seg = i + 1 < v.size() ? i : i - 1;  // outgoing, else incoming
    const Vec2 d = v[seg + 1] - v[seg];
    out.rows[i] = {s, v[i].x, v[i].y, std::atan2(d.y, d.x), 0.0};
  }
  return out;
}

CurveSamples samples_from_arcchain(const ArcChain& chain) {
  CurveSamples out;
  out.rows.reserve(chain.arcs.size() + 1);
  double s = 0.0;
  for (std::size_t i = 0; i <= chain.arcs.size(); ++i) {
    const bool last = i == chain.arcs.size();
    const Arc& arc = chain.arcs[last ? i - 1 : i];
    const double angle = last ? arc.start_angle + arc.sweep : arc.start_angle;
    const Vec2 p = arc.center + arc.radius * unit_vector(angle);
    const double tangent = angle + (arc.sweep >= 0.0 ? 0.5 : -0.5) * kPi;
    if (i > 0) {
      const Arc& prev = chain.arcs[i - 1];
      s += prev.radius * std::fabs(prev.sweep);
    }
    out.rows.push_back({s, p.x, p.y, tangent, 1.0 / arc.radius});
  }
  return out;
}

namespace {

struct Bbox {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool empty = true;

  void include(Vec2 p) {
    if (empty) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      empty = false;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
};

void include_arc(Bbox& box, const Arc& arc) {
  box.include(arc_start(arc));
  box.include(arc_end(arc));
  // Axis extremes reached inside the sweep.
  const double a0 = arc.start_angle;
  const double a1 = arc.start_angle + arc.sweep;
  const double lo = std::min(a0, a1);
  const double hi = std::max(a0, a1);
  for (long k = static_cast<long>(std::ceil(lo / (0.5 * kPi)));
       k <= static_cast<long>(std::floor(hi / (0.5 * kPi))); ++k) {
    box.include(arc.center + arc.radius * unit_vector(0.5 * kPi * k));
  }
}

// Shared SVG frame. The single scale(1,-1) flips geometry y-up into SVG
// y-down; the viewBox is the flipped bounding box plus a 5% margin.
std::string svg_document(const Bbox& box, int width_px, const std::string& body) {
  const double w = box.max_x - box.min_x;
  const double h = box.max_y - box.min_y;
  const double margin = 0.05 * std::max({w, h, 1e-9});
  const double vb_x = box.min_x - margin;
  const double vb_y = -box.max_y - margin;
  const double vb_w = w + 2.0 * margin;
  const double vb_h = h + 2.0 * margin;
  const int height_px =
      std::max(1, static_cast<int>(std::lround(width_px * vb_h / vb_w)));

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width_px << "\" height=\"" << height_px << "\" viewBox=\""
      << format_double(vb_x) << " " << format_double(vb_y) << " "
      << format_double(vb_w) << " " << format_double(vb_h) << "\">\n"
      << "<g transform=\"scale(1 -1)\" fill=\"none\" stroke=\"black\" "
         "stroke-width=\"1\">\n"
      << body << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string to_svg_polyline(const std::vector<Vec2>& points, int width_px) {
  if (points.size() < 2)
    throw InvalidParameter("svg: need at least two points");
  if (width_px < 1) throw InvalidParameter("svg: width must be positive");

  Bbox box;
  std::ostringstream body;
  body << "<polyline points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    box.include(points[i]);
    if (i > 0) body << ' ';
    body << format_double(points[i].x) << ',' << format_double(points[i].y);
  }
  body << "\"/>\n";
  return svg_document(box, width_px, body.str());
}

std::string to_svg_arcs(const ArcChain& chain, int width_px) {
  if (width_px < 1) throw InvalidParameter("svg: width must be positive");

  Bbox box;
  std::ostringstream body;
  const Vec2 start = arc_start(chain.arcs.front());
  body << "<path d=\"M " << format_double(start.x) << ' ' << format_double(start.y);
  for (const Arc& arc : chain.arcs) {
    include_arc(box, arc);
    const Vec2 end = arc_end(arc);
    const int large = std::fabs(arc.sweep) > kPi ? 1 : 0;
    const int sweep_flag = arc.sweep > 0.0 ? 1 : 0;
    body << " A " << format_double(arc.radius) << ' ' << format_double(arc.radius)
         << " 0 " << large << ' ' << sweep_flag << ' ' << format_double(end.x) << ' '
         << format_double(end.y);
  }
  body << "\"/>\n";
  return svg_document(box, width_px, body.str());
}

}  // namespace spiralis
