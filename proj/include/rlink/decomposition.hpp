#pragma once

// Horizontal and vertical slab decompositions of a domain, and point location
// against them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rlink/domain.hpp"

namespace rlink {

using RectId = std::uint32_t;

struct Rect {
  RectId id = 0;
  Axis   orientation = Axis::horizontal;
  Coord  xmin = 0;
  Coord  xmax = 0;
  Coord  ymin = 0;
  Coord  ymax = 0;

  [[nodiscard]] Coord    width() const { return xmax - xmin; }
  [[nodiscard]] Coord    height() const { return ymax - ymin; }
  [[nodiscard]] __int128 area() const { return static_cast<__int128>(width()) * height(); }
  [[nodiscard]] Point    center() const { return {(xmin + xmax) / 2, (ymin + ymax) / 2}; }

  [[nodiscard]] bool contains(Point p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }
  [[nodiscard]] bool same_box(const Rect& o) const {
    return xmin == o.xmin && xmax == o.xmax && ymin == o.ymin && ymax == o.ymax;
  }
};

/// Positive-area overlap of the closed boxes.
inline bool overlaps(const Rect& a, const Rect& b) {
  return std::max(a.xmin, b.xmin) < std::min(a.xmax, b.xmax) &&
         std::max(a.ymin, b.ymin) < std::min(a.ymax, b.ymax);
}

/// Box of the common part of two rectangles; meaningful when overlaps().
inline Rect intersection(const Rect& a, const Rect& b) {
  return {0, a.orientation, std::max(a.xmin, b.xmin), std::min(a.xmax, b.xmax),
          std::max(a.ymin, b.ymin), std::min(a.ymax, b.ymax)};
}

struct Decomposition {
  Axis              orientation = Axis::horizontal;
  std::vector<Rect> rects;

  [[nodiscard]] std::size_t size() const { return rects.size(); }
};

namespace detail {

// Bottom-to-top sweep producing maximal rectangles bounded above and below by
// lines through horizontal edges. Assumes general position: one horizontal
// edge per y-coordinate.
inline std::vector<Rect> slab_sweep(const Domain& d) {
  std::vector<Edge> hs;
  for (const auto& e : d.edges()) {
    if (e.axis == Axis::horizontal) hs.push_back(e);
  }
  std::sort(hs.begin(), hs.end(), [](const Edge& a, const Edge& b) { return a.fixed < b.fixed; });

  struct Open {
    Coord right;
    Coord since;
  };
  std::map<Coord, Open> active;  // cross-section intervals keyed by left end
  std::vector<Rect>     out;

  auto close = [&](std::map<Coord, Open>::iterator it, Coord y) {
    if (it->second.since < y) {
      out.push_back({0, Axis::horizontal, it->first, it->second.right, it->second.since, y});
    }
    return active.erase(it);
  };

  for (const Edge& e : hs) {
    const Coord y = e.fixed;
    const Coord x1 = e.lo;
    const Coord x2 = e.hi;

    // Interval below that contains the whole edge: the edge is a top boundary.
    auto it = active.upper_bound(x1);
    if (it != active.begin()) {
      auto prev = std::prev(it);
      if (prev->first <= x1 && x2 <= prev->second.right) {
        const Coord a = prev->first;
        const Coord b = prev->second.right;
        close(prev, y);
        if (a < x1) active.emplace(a, Open{x1, y});
        if (x2 < b) active.emplace(x2, Open{b, y});
        continue;
      }
    }

    // Otherwise the domain lies above the edge; merge with touching intervals.
    Coord left = x1;
    Coord right = x2;
    auto  l = active.upper_bound(x1);
    if (l != active.begin()) {
      auto prev = std::prev(l);
      if (prev->second.right == x1) {
        left = prev->first;
        close(prev, y);
      }
    }
    auto r = active.find(x2);
    if (r != active.end()) {
      right = r->second.right;
      close(r, y);
    }
    active.emplace(left, Open{right, y});
  }
  if (!active.empty()) throw std::logic_error("slab sweep ended with open intervals");
  return out;
}

inline void number(std::vector<Rect>& rects, Axis orientation) {
  if (orientation == Axis::horizontal) {
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) {
      return a.ymin != b.ymin ? a.ymin < b.ymin : a.xmin < b.xmin;
    });
  } else {
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) {
      return a.xmin != b.xmin ? a.xmin < b.xmin : a.ymin < b.ymin;
    });
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    rects[i].id = static_cast<RectId>(i);
    rects[i].orientation = orientation;
  }
}

}  // namespace detail

/// Rectangles cut by extending every horizontal boundary edge left and right.
/// Ids are ordered by (ymin, xmin).
inline Decomposition horizontal_decomposition(const Domain& d) {
  Decomposition dec{Axis::horizontal, detail::slab_sweep(d)};
  detail::number(dec.rects, Axis::horizontal);
  return dec;
}

/// Rectangles cut by extending every vertical boundary edge up and down.
/// Ids are ordered by (xmin, ymin).
inline Decomposition vertical_decomposition(const Domain& d) {
  auto rects = detail::slab_sweep(d.transposed());
  for (auto& r : rects) {
    std::swap(r.xmin, r.ymin);
    std::swap(r.xmax, r.ymax);
  }
  Decomposition dec{Axis::vertical, std::move(rects)};
  detail::number(dec.rects, Axis::vertical);
  return dec;
}

/// Ids of every rectangle whose closure contains p. Throws input_error when p
/// lies outside the domain (the closures cover it exactly).
inline std::vector<RectId> locate(const Decomposition& dec, Point p) {
  std::vector<RectId> ids;
  for (const auto& r : dec.rects) {
    if (r.contains(p)) ids.push_back(r.id);
  }
  if (ids.empty()) throw input_error("point outside the domain");
  return ids;
}

}  // namespace rlink
