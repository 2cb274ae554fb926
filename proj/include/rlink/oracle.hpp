#pragma once

// Brute-force link distances by turn-counting BFS on a compressed grid.
//
// The grid cuts the bounding box at every vertex coordinate (plus any extra
// coordinates the caller asks for). Lattice positions alternate between cut
// lines and the open gaps between them in each axis, so a position is a cut
// point, a piece of cut line, or an open cell. Every position lies either
// entirely inside the closed domain or entirely outside it, which makes
// straight moves between neighboring inside positions exact. A search state
// is (position, heading); moving along the heading is free, turning costs
// one link, and the first link costs one.
//
// This module does not use the graph of oriented distances.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "rlink/decomposition.hpp"
#include "rlink/metrics.hpp"

namespace rlink {

class GridModel {
 public:
  GridModel() = default;

  [[nodiscard]] const std::vector<Coord>& xs() const { return xs_; }
  [[nodiscard]] const std::vector<Coord>& ys() const { return ys_; }

  /// Open cells between consecutive cuts.
  [[nodiscard]] std::size_t cell_count() const {
    return xs_.empty() ? 0 : (xs_.size() - 1) * (ys_.size() - 1);
  }
  [[nodiscard]] std::size_t inside_cell_count() const {
    std::size_t c = 0;
    for (std::size_t a = 1; a < width_; a += 2) {
      for (std::size_t b = 1; b < height_; b += 2) c += inside_[index(a, b)];
    }
    return c;
  }

  [[nodiscard]] std::size_t state_count() const { return 2 * width_ * height_; }

  /// Overlay faces h ∩ v of the two decompositions and one representative
  /// (the box center) per face.
  [[nodiscard]] const std::vector<Rect>&  faces() const { return faces_; }
  [[nodiscard]] const std::vector<Point>& representatives() const { return reps_; }

  /// Lattice index of p, or -1 outside the domain.
  [[nodiscard]] long position_of(Point p) const {
    const long a = lattice(xs_, p.x);
    const long b = lattice(ys_, p.y);
    if (a < 0 || b < 0) return -1;
    const auto idx = index(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    return inside_[idx] ? static_cast<long>(idx) : -1;
  }

  /// Link distances from `from` to every lattice position (min over the two
  /// final headings); unreachable or outside positions hold -1.
  [[nodiscard]] std::vector<int> distances_from(Point from) const {
    const long src = position_of(from);
    if (src < 0) throw input_error("point outside the domain");
    const std::size_t      cells = width_ * height_;
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(2 * cells, kInf);

    // Layered 0-1 BFS: `cur` holds states at the current link count.
    std::vector<std::size_t> cur;
    std::vector<std::size_t> next;
    for (std::size_t h = 0; h < 2; ++h) {
      dist[2 * static_cast<std::size_t>(src) + h] = 1;
      cur.push_back(2 * static_cast<std::size_t>(src) + h);
    }
    std::uint32_t level = 1;
    while (!cur.empty()) {
      for (std::size_t k = 0; k < cur.size(); ++k) {
        const std::size_t s = cur[k];
        if (dist[s] != level) continue;
        const std::size_t pos = s / 2;
        const std::size_t heading = s % 2;  // 0 = horizontal, 1 = vertical
        const std::size_t a = pos % width_;
        const std::size_t b = pos / width_;
        auto step = [&](std::size_t np) {
          const std::size_t ns = 2 * np + heading;
          if (inside_[np] && dist[ns] > level) {
            dist[ns] = level;
            cur.push_back(ns);
          }
        };
        if (heading == 0) {
          if (a > 0) step(pos - 1);
          if (a + 1 < width_) step(pos + 1);
        } else {
          if (b > 0) step(pos - width_);
          if (b + 1 < height_) step(pos + width_);
        }
        const std::size_t turned = 2 * pos + (1 - heading);
        if (dist[turned] > level + 1) {
          dist[turned] = level + 1;
          next.push_back(turned);
        }
      }
      cur.swap(next);
      next.clear();
      ++level;
    }

    std::vector<int> out(cells, -1);
    for (std::size_t p = 0; p < cells; ++p) {
      const auto d = std::min(dist[2 * p], dist[2 * p + 1]);
      if (d != kInf) out[p] = static_cast<int>(d);
    }
    out[static_cast<std::size_t>(src)] = 0;
    return out;
  }

  friend GridModel build_grid(const Domain& d, std::span<const Point> extra);

 private:
  [[nodiscard]] std::size_t index(std::size_t a, std::size_t b) const { return b * width_ + a; }

  // 2k on cut k, 2k+1 strictly between cuts k and k+1, -1 outside the range.
  static long lattice(const std::vector<Coord>& cuts, Coord c) {
    if (cuts.empty() || c < cuts.front() || c > cuts.back()) return -1;
    const auto it = std::lower_bound(cuts.begin(), cuts.end(), c);
    const auto k = static_cast<long>(it - cuts.begin());
    return *it == c ? 2 * k : 2 * k - 1;
  }

  std::vector<Coord>        xs_;
  std::vector<Coord>        ys_;
  std::size_t               width_ = 0;
  std::size_t               height_ = 0;
  std::vector<std::uint8_t> inside_;
  std::vector<Rect>         faces_;
  std::vector<Point>        reps_;
};

/// Grid over the vertex coordinates of d plus the coordinates of `extra`.
/// Distances from oracle_distance are exact for points whose coordinates are
/// all cuts; for other points they are exact unless both points share a
/// decomposition rectangle.
inline GridModel build_grid(const Domain& d, std::span<const Point> extra = {}) {
  GridModel g;
  const auto edges = d.edges();
  for (const auto& e : edges) {
    (e.axis == Axis::vertical ? g.xs_ : g.ys_).push_back(e.fixed);
  }
  for (const auto& p : extra) {
    g.xs_.push_back(p.x);
    g.ys_.push_back(p.y);
  }
  for (auto* v : {&g.xs_, &g.ys_}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  g.width_ = 2 * g.xs_.size() - 1;
  g.height_ = 2 * g.ys_.size() - 1;
  g.inside_.assign(g.width_ * g.height_, 0);

  // Open cells: per row, parity of vertical edges to the left.
  const std::size_t nx = g.xs_.size();
  std::vector<std::uint8_t> crossing(nx);
  for (std::size_t row = 0; row + 1 < g.ys_.size(); ++row) {
    const Coord y0 = g.ys_[row];
    const Coord y1 = g.ys_[row + 1];
    std::fill(crossing.begin(), crossing.end(), 0);
    for (const auto& e : edges) {
      if (e.axis == Axis::vertical && e.lo <= y0 && y1 <= e.hi) {
        const auto k = std::lower_bound(g.xs_.begin(), g.xs_.end(), e.fixed) - g.xs_.begin();
        crossing[static_cast<std::size_t>(k)] ^= 1U;
      }
    }
    std::uint8_t in = 0;
    for (std::size_t col = 0; col + 1 < nx; ++col) {
      in ^= crossing[col];
      g.inside_[g.index(2 * col + 1, 2 * row + 1)] = in;
    }
  }
  // Lines and points belong to the closed domain iff an adjacent cell does.
  auto cell_in = [&](long a, long b) {
    if (a < 0 || b < 0 || a >= static_cast<long>(g.width_) || b >= static_cast<long>(g.height_)) {
      return false;
    }
    return g.inside_[g.index(static_cast<std::size_t>(a), static_cast<std::size_t>(b))] != 0;
  };
  for (long b = 0; b < static_cast<long>(g.height_); ++b) {
    for (long a = 0; a < static_cast<long>(g.width_); ++a) {
      if (a % 2 == 1 && b % 2 == 1) continue;
      // neighboring open columns/rows: itself if open, both sides if a cut
      const long a0 = a % 2 == 1 ? a : a - 1;
      const long a1 = a % 2 == 1 ? a : a + 1;
      const long b0 = b % 2 == 1 ? b : b - 1;
      const long b1 = b % 2 == 1 ? b : b + 1;
      const bool in = cell_in(a0, b0) || cell_in(a0, b1) || cell_in(a1, b0) || cell_in(a1, b1);
      g.inside_[g.index(static_cast<std::size_t>(a), static_cast<std::size_t>(b))] = in;
    }
  }

  const auto h = horizontal_decomposition(d);
  const auto v = vertical_decomposition(d);
  for (const auto& a : h.rects) {
    for (const auto& b : v.rects) {
      if (overlaps(a, b)) {
        g.faces_.push_back(intersection(a, b));
        g.reps_.push_back(g.faces_.back().center());
      }
    }
  }
  return g;
}

/// Link distance between two points of the grid (0 when p == q).
inline int oracle_distance(const GridModel& g, Point p, Point q) {
  const long qi = g.position_of(q);
  if (qi < 0) throw input_error("point outside the domain");
  if (p == q) return 0;
  return g.distances_from(p)[static_cast<std::size_t>(qi)];
}

/// Exact link distance: builds a grid that includes the coordinates of p, q.
inline int oracle_distance(const Domain& d, Point p, Point q) {
  const Point extra[] = {p, q};
  return oracle_distance(build_grid(d, extra), p, q);
}

/// Pairwise distances between face representatives, clamped below at 2 (the
/// distance between generic points sharing a rectangle).
struct OracleTable {
  std::vector<Rect>             faces;
  std::vector<Point>            reps;
  std::vector<std::vector<int>> dist;
};

inline OracleTable oracle_table(const GridModel& g) {
  OracleTable t;
  t.faces = g.faces();
  t.reps = g.representatives();
  std::vector<long> pos;
  for (const auto& r : t.reps) pos.push_back(g.position_of(r));
  for (const auto& r : t.reps) {
    const auto all = g.distances_from(r);
    std::vector<int> row;
    row.reserve(t.reps.size());
    for (long p : pos) row.push_back(std::max(2, all[static_cast<std::size_t>(p)]));
    t.dist.push_back(std::move(row));
  }
  return t;
}

inline DiameterResult oracle_diameter(const OracleTable& t) {
  DiameterResult r;
  r.engine = Engine::oracle;
  r.value = 2;
  std::size_t fa = 0;
  std::size_t fb = 0;
  for (std::size_t a = 0; a < t.reps.size(); ++a) {
    for (std::size_t b = 0; b < t.reps.size(); ++b) {
      if (t.dist[a][b] > r.value) {
        r.value = t.dist[a][b];
        fa = a;
        fb = b;
      }
    }
  }
  r.p = t.reps[fa];
  r.q = t.reps[fb];
  if (r.value == 2) r.q = {t.faces[fa].xmin, t.faces[fa].ymin};
  return r;
}

inline RadiusResult oracle_radius(const OracleTable& t) {
  RadiusResult r;
  r.engine = Engine::oracle;
  r.value = std::numeric_limits<int>::max();
  for (std::size_t a = 0; a < t.reps.size(); ++a) {
    const int ecc = *std::max_element(t.dist[a].begin(), t.dist[a].end());
    if (ecc < r.value) {
      r.value = ecc;
      r.center = t.reps[a];
    }
  }
  return r;
}

inline DiameterResult oracle_diameter(const GridModel& g) { return oracle_diameter(oracle_table(g)); }
inline RadiusResult   oracle_radius(const GridModel& g) { return oracle_radius(oracle_table(g)); }

/// max(2, max over face representatives of the link distance from c).
inline int oracle_eccentricity(const Domain& d, Point c) {
  const Point extra[] = {c};
  const auto  g = build_grid(d, extra);
  const auto  all = g.distances_from(c);
  int         ecc = 2;
  for (const auto& r : g.representatives()) {
    ecc = std::max(ecc, all[static_cast<std::size_t>(g.position_of(r))]);
  }
  return ecc;
}

}  // namespace rlink
