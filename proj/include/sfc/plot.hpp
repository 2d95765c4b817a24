#pragma once

// The per-knot geometry graph: primitive lattice points (m, n) classified at
// beta = 2 pi, the spherical band x_U < x < x_L, the Nil boundary x = x_L
// and the e = 0 line. Everything is computed exactly; coordinates become
// doubles only when the SVG is written.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "sfc/surgery.hpp"

namespace sfc {

struct PlotWindow {
  Rational x_max;
  Rational y_min;
  Rational y_max;
};

struct PlotPoint {
  LinePoint point;
  Integer p;
  Integer q;
  GeometryResult geometry;  // at beta = 2 pi, so x = m
};

struct PlotModel {
  TorusKnot knot;
  PlotWindow window;
  XLimits boundaries;
  LinePoint euler_zero_line;  // (rs, 1) left-handed, (rs, -1) right-handed
  std::vector<PlotPoint> points;  // ordered by (m, n)
  std::vector<LinePoint> highlighted_lines;
  std::vector<Integer> orbifold_abscissas;  // integers strictly inside (x_U, x_L)
};

inline PlotModel build_plot(const TorusKnot& knot, const PlotWindow& window) {
  PlotModel model{knot, window, x_limits(knot), LinePoint{knot.rs(), knot.hand == Handedness::Left ? 1 : -1}, {}, {}, {}};
  model.highlighted_lines.push_back(model.euler_zero_line);
  for (const auto& oa : spherical_orbifold_angles(knot)) model.orbifold_abscissas.push_back(oa.x);

  const Integer m_hi = window.x_max.floor();
  const Integer n_lo = window.y_min.ceil();
  const Integer n_hi = window.y_max.floor();
  for (Integer m = 1; m <= m_hi; ++m) {
    for (Integer n = n_lo; n <= n_hi; ++n) {
      if (gcd(m, n) != 1) continue;
      const LinePoint pt{m, n};
      const SurgerySpec spec = surgery_of_line(knot, pt);
      model.points.push_back({pt, spec.p, spec.q, classify_surgery_cone(spec, PiRational::full_turn())});
    }
  }
  return model;
}

/// Header "m,n,p,q,x,geometry" and one row per lattice point.
inline std::string export_csv(const PlotModel& model) {
  std::string out = "m,n,p,q,x,geometry\n";
  for (const auto& pt : model.points) {
    out += std::to_string(pt.point.m) + "," + std::to_string(pt.point.n) + "," + std::to_string(pt.p) + "," +
           std::to_string(pt.q) + "," + std::to_string(pt.point.m) + "," + std::string(pt.geometry.name()) + "\n";
  }
  return out;
}

namespace detail {

inline std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

enum class Marker { Diamond, Square, Circle, Cross };

inline Marker marker_for(const GeometryResult& g) {
  if (!g.has_structure()) return Marker::Cross;
  switch (g.geometry()) {
    case GeometryType::Spherical:
    case GeometryType::S2xR: return Marker::Diamond;
    case GeometryType::Nil:
    case GeometryType::Euclidean: return Marker::Square;
    case GeometryType::SL2R:
    case GeometryType::H2xR: return Marker::Circle;
  }
  return Marker::Cross;
}

}  // namespace detail

/// SVG 1.1 document. Plot elements live in data coordinates inside a single
/// uniformly scaled group, so the x attribute of each boundary line is the
/// boundary abscissa itself.
inline std::string render_svg(const PlotModel& model) {
  using detail::num;
  const double x_max = std::max(model.window.x_max.to_double(), 0.0);
  const double y_min = model.window.y_min.to_double();
  const double y_max = std::max(model.window.y_max.to_double(), y_min);
  const double margin = 48.0;
  const double unit = 600.0 / std::max({x_max, y_max - y_min, 1.0});
  const double width = x_max * unit + 2 * margin;
  const double height = (y_max - y_min) * unit + 2 * margin;
  const double origin_x = margin;
  const double origin_y = margin + y_max * unit;
  const std::string stroke = num(1.5 / unit);
  const double r = 5.0 / unit;
  const bool empty = x_max <= 0.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<title>" + model.knot.to_string() + "</title>\n";
  out += "<style type=\"text/css\">\n"
         ".spherical-band{fill:#dbe9f6;stroke:none}\n"
         ".axis{stroke:#000}\n"
         ".tick{stroke:#000}\n"
         ".boundary-upper{stroke:#1f4e79;stroke-dasharray:0.1,0.08}\n"
         ".boundary-lower{stroke:#1f4e79}\n"
         ".euler-zero{stroke:#b03a2e}\n"
         ".spherical{fill:#1f4e79}\n"
         ".flat{fill:#2e7d32}\n"
         ".hyperbolic{fill:none;stroke:#444}\n"
         ".none{stroke:#999}\n"
         ".orbifold-admissible{fill:#e6a100}\n"
         "text{font-family:sans-serif;font-size:11px}\n"
         "</style>\n";
  out += "<g id=\"plot\" transform=\"translate(" + num(origin_x) + "," + num(origin_y) + ") scale(" + num(unit) + "," +
         num(-unit) + ")\" stroke-width=\"" + stroke + "\">\n";

  const double x_upper = model.boundaries.upper.to_double();
  const double x_lower = model.boundaries.lower.to_double();
  if (!empty && x_upper < x_max && y_max > y_min) {
    out += "<rect class=\"spherical-band\" x=\"" + num(x_upper) + "\" y=\"" + num(y_min) + "\" width=\"" +
           num(std::min(x_lower, x_max) - x_upper) + "\" height=\"" + num(y_max - y_min) + "\"/>\n";
  }
  // axes
  if (y_min <= 0.0 && 0.0 <= y_max) {
    out += "<line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"" + num(x_max) + "\" y2=\"0\"/>\n";
  }
  out += "<line class=\"axis\" x1=\"0\" y1=\"" + num(y_min) + "\" x2=\"0\" y2=\"" + num(y_max) + "\"/>\n";
  for (Integer x = 1; static_cast<double>(x) <= x_max; ++x) {
    out += "<line class=\"tick\" x1=\"" + num(static_cast<double>(x)) + "\" y1=\"" + num(-3.0 / unit) + "\" x2=\"" +
           num(static_cast<double>(x)) + "\" y2=\"" + num(3.0 / unit) + "\"/>\n";
  }
  if (!empty) {
    if (x_upper <= x_max) {
      out += "<line class=\"boundary-upper\" x1=\"" + num(x_upper) + "\" y1=\"" + num(y_min) + "\" x2=\"" +
             num(x_upper) + "\" y2=\"" + num(y_max) + "\"/>\n";
    }
    if (x_lower <= x_max) {
      out += "<line class=\"boundary-lower\" x1=\"" + num(x_lower) + "\" y1=\"" + num(y_min) + "\" x2=\"" +
             num(x_lower) + "\" y2=\"" + num(y_max) + "\"/>\n";
    }
    // e = 0 line from the origin through (rs, +-1), clipped to the window
    const double dx = static_cast<double>(model.euler_zero_line.m);
    const double dy = static_cast<double>(model.euler_zero_line.n);
    const double t_x = x_max / dx;
    const double t_y = dy > 0 ? y_max / dy : y_min / dy;
    const double t = std::max(0.0, std::min(t_x, t_y));
    if (t > 0.0) {
      out += "<line class=\"euler-zero\" x1=\"0\" y1=\"0\" x2=\"" + num(t * dx) + "\" y2=\"" + num(t * dy) + "\"/>\n";
    }
  }
  for (const auto& pt : model.points) {
    const double cx = static_cast<double>(pt.point.m);
    const double cy = static_cast<double>(pt.point.n);
    switch (detail::marker_for(pt.geometry)) {
      case detail::Marker::Diamond:
        out += "<path class=\"spherical\" d=\"M" + num(cx - r) + "," + num(cy) + " L" + num(cx) + "," + num(cy + r) +
               " L" + num(cx + r) + "," + num(cy) + " L" + num(cx) + "," + num(cy - r) + " Z\"/>\n";
        break;
      case detail::Marker::Square:
        out += "<rect class=\"flat\" x=\"" + num(cx - r) + "\" y=\"" + num(cy - r) + "\" width=\"" + num(2 * r) +
               "\" height=\"" + num(2 * r) + "\"/>\n";
        break;
      case detail::Marker::Circle:
        out += "<circle class=\"hyperbolic\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\"/>\n";
        break;
      case detail::Marker::Cross:
        out += "<path class=\"none\" d=\"M" + num(cx - r) + "," + num(cy - r) + " L" + num(cx + r) + "," + num(cy + r) +
               " M" + num(cx - r) + "," + num(cy + r) + " L" + num(cx + r) + "," + num(cy - r) + "\"/>\n";
        break;
    }
  }
  for (Integer x : model.orbifold_abscissas) {
    if (static_cast<double>(x) > x_max) continue;
    out += "<circle class=\"orbifold-admissible\" cx=\"" + num(static_cast<double>(x)) + "\" cy=\"0\" r=\"" +
           num(0.6 * r) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"labels\">\n";
  for (Integer x = 0; static_cast<double>(x) <= x_max; ++x) {
    out += "<text x=\"" + num(origin_x + static_cast<double>(x) * unit) + "\" y=\"" + num(height - margin / 3) +
           "\" text-anchor=\"middle\">" + std::to_string(x) + "</text>\n";
  }
  out += "<text x=\"" + num(margin / 3) + "\" y=\"" + num(margin / 2) + "\">" + model.knot.to_string() +
         "  x_U=" + model.boundaries.upper.to_string() + "  x_L=" + model.boundaries.lower.to_string() + "</text>\n";
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace sfc
