#pragma once

// SVG drawing of a planar swiss-cheese vertex: the unit disc sits in a
// 512x512 viewport, holes are outlined, collapsed discs are dots.

#include <cstdio>
#include <sstream>
#include <string>

#include "folab/swiss_cheese.hpp"

namespace folab {

struct SvgFrame {
  double size = 512;
  double radius = 240;
  double cx = 256, cy = 256;

  double x(double u) const { return cx + radius * u; }
  double y(double v) const { return cy - radius * v; }
  double len(double r) const { return radius * r; }
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

/// Draws one vertex of a d = 2 element with the given root color.
inline std::string render_vertex_svg(const ScVertex& v, const std::string& root, const SvgFrame& fr = {}) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(fr.size) << "\" height=\"" << fmt(fr.size)
    << "\" viewBox=\"0 0 " << fmt(fr.size) << ' ' << fmt(fr.size) << "\">\n";
  const bool half = root != kFull;
  if (half) {
    s << "  <clipPath id=\"upper\"><rect x=\"0\" y=\"0\" width=\"" << fmt(fr.size) << "\" height=\"" << fmt(fr.cy)
      << "\"/></clipPath>\n";
  }
  const std::string clip = half ? " clip-path=\"url(#upper)\"" : "";
  s << "  <circle cx=\"" << fmt(fr.cx) << "\" cy=\"" << fmt(fr.cy) << "\" r=\"" << fmt(fr.radius)
    << "\" fill=\"#f4efe1\" stroke=\"black\"" << clip << "/>\n";
  if (half)
    s << "  <line x1=\"0\" y1=\"" << fmt(fr.cy) << "\" x2=\"" << fmt(fr.size) << "\" y2=\""
      << fmt(fr.cy) << "\" stroke=\"black\"/>\n";
  for (std::size_t k = 0; k < v.inputs.size(); ++k) {
    const auto& a = v.inputs[k];
    if (a.is_affine()) {
      if (a.center.size() != 2) throw error("render: only d = 2 is drawn");
      const std::string hclip = a.color == kHalf ? clip : "";
      s << "  <circle cx=\"" << fmt(fr.x(a.center[0])) << "\" cy=\"" << fmt(fr.y(a.center[1])) << "\" r=\""
        << fmt(fr.len(a.radius)) << "\" fill=\"white\" stroke=\"black\"" << hclip << "/>\n";
      s << "  <text x=\"" << fmt(fr.x(a.center[0])) << "\" y=\"" << fmt(fr.y(a.center[1]) - (a.color == kHalf ? 6 : -4))
        << "\" font-size=\"12\" text-anchor=\"middle\">" << k << "</text>\n";
    } else if (a.point.size() == 2) {
      s << "  <circle cx=\"" << fmt(fr.x(a.point[0])) << "\" cy=\"" << fmt(fr.y(a.point[1]))
        << "\" r=\"4\" fill=\"black\"/>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace folab
