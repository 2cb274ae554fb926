#pragma once

// Debug rendering of a domain with optional decomposition and witness layers.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "rlink/decomposition.hpp"

namespace rlink {

struct SvgLayers {
  std::vector<Decomposition>     decompositions;
  std::vector<Point>             points;  // witness points
  std::vector<std::vector<Point>> paths;  // polylines
};

namespace detail {

// Internal coordinates are doubled; print them in input units.
inline std::string half(Coord c) {
  std::string s = std::to_string(c / 2);
  if (c % 2 != 0) s = (c < 0 && c / 2 == 0 ? "-" : "") + s + ".5";
  return s;
}

}  // namespace detail

inline std::string render_svg(const Domain& d, const SvgLayers& layers = {}) {
  Coord xmin = d.outer().vertices.front().x;
  Coord xmax = xmin;
  Coord ymin = d.outer().vertices.front().y;
  Coord ymax = ymin;
  for (const auto& p : d.outer().vertices) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const Coord w = xmax - xmin;
  const Coord h = ymax - ymin;
  const Coord pad = std::max<Coord>(2, std::max(w, h) / 20);
  const double stroke = static_cast<double>(std::max(w, h)) / 400.0;

  std::ostringstream os;
  using detail::half;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << half(xmin - pad) << ' '
     << half(-(ymax + pad)) << ' ' << half(w + 2 * pad) << ' ' << half(h + 2 * pad) << "\">\n";
  // flip y so the picture matches the usual math orientation
  os << "<g transform=\"scale(1,-1)\" stroke-width=\"" << stroke << "\">\n";

  auto polygon = [&](const Ring& r, const char* fill) {
    os << "<polygon fill=\"" << fill << "\" stroke=\"black\" points=\"";
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << (i ? " " : "") << half(r.vertices[i].x) << ',' << half(r.vertices[i].y);
    }
    os << "\"/>\n";
  };
  polygon(d.outer(), "#eef2f7");
  for (const auto& hole : d.holes()) polygon(hole, "white");

  for (const auto& dec : layers.decompositions) {
    const char* color = dec.orientation == Axis::horizontal ? "#d9534f" : "#337ab7";
    for (const auto& r : dec.rects) {
      os << "<rect class=\"" << to_string(dec.orientation) << "\" x=\"" << half(r.xmin) << "\" y=\""
         << half(r.ymin) << "\" width=\"" << half(r.width()) << "\" height=\"" << half(r.height())
         << "\" fill=\"none\" stroke=\"" << color << "\" stroke-dasharray=\"" << 3 * stroke
         << "\"/>\n";
    }
  }
  for (const auto& path : layers.paths) {
    os << "<polyline fill=\"none\" stroke=\"#5cb85c\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      os << (i ? " " : "") << half(path[i].x) << ',' << half(path[i].y);
    }
    os << "\"/>\n";
  }
  for (const auto& p : layers.points) {
    os << "<circle cx=\"" << half(p.x) << "\" cy=\"" << half(p.y) << "\" r=\"" << 4 * stroke
       << "\" fill=\"#f0ad4e\" stroke=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace rlink
