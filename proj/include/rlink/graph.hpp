#pragma once

// Graph of oriented distances: one node per rectangle of the two slab
// decompositions, one edge per horizontal/vertical pair with positive-area
// overlap. Oriented distance is hop count plus one.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rlink/decomposition.hpp"

namespace rlink {

/// Axis-parallel segment; for a horizontal segment `fixed` is y and [lo, hi]
/// spans x.
struct Segment {
  Axis  axis = Axis::horizontal;
  Coord fixed = 0;
  Coord lo = 0;
  Coord hi = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Segment through the center of r along r's orientation: left-to-right for
/// a horizontal rectangle, bottom-to-top for a vertical one.
inline Segment middle_segment(const Rect& r) {
  if (r.orientation == Axis::horizontal) {
    return {Axis::horizontal, (r.ymin + r.ymax) / 2, r.xmin, r.xmax};
  }
  return {Axis::vertical, (r.xmin + r.xmax) / 2, r.ymin, r.ymax};
}

/// Closed crossing test for segments of opposite axes.
inline bool crosses(const Segment& a, const Segment& b) {
  if (a.axis == b.axis) return false;
  return b.lo <= a.fixed && a.fixed <= b.hi && a.lo <= b.fixed && b.fixed <= a.hi;
}

class OrientedGraph {
 public:
  OrientedGraph() = default;

  OrientedGraph(const Decomposition& h, const Decomposition& v) : num_h_(h.size()) {
    rects_.reserve(h.size() + v.size());
    for (const auto& r : h.rects) rects_.push_back(r);
    for (const auto& r : v.rects) {
      rects_.push_back(r);
      rects_.back().id = static_cast<RectId>(num_h_ + r.id);
    }
    adj_.resize(rects_.size());
  }

  [[nodiscard]] std::size_t size() const { return rects_.size(); }
  [[nodiscard]] std::size_t horizontal_count() const { return num_h_; }
  [[nodiscard]] std::size_t chi() const { return chi_; }

  [[nodiscard]] const Rect&              rect(RectId i) const { return rects_[i]; }
  [[nodiscard]] const std::vector<Rect>& rects() const { return rects_; }
  [[nodiscard]] std::span<const RectId>  neighbors(RectId i) const { return adj_[i]; }

  [[nodiscard]] bool is_horizontal(RectId i) const { return i < num_h_; }
  [[nodiscard]] Axis orientation(RectId i) const {
    return is_horizontal(i) ? Axis::horizontal : Axis::vertical;
  }

  [[nodiscard]] bool adjacent(RectId a, RectId b) const {
    const auto& n = adj_[a];
    return std::binary_search(n.begin(), n.end(), b);
  }

  /// Edges as (horizontal id, vertical id), sorted.
  [[nodiscard]] std::vector<std::pair<RectId, RectId>> edges() const {
    std::vector<std::pair<RectId, RectId>> out;
    out.reserve(chi_);
    for (RectId h = 0; h < num_h_; ++h) {
      for (RectId v : adj_[h]) out.emplace_back(h, v);
    }
    return out;
  }

  /// The overlay face of an edge.
  [[nodiscard]] Rect face(RectId a, RectId b) const { return intersection(rects_[a], rects_[b]); }

  void add_edge(RectId h, RectId v) {
    adj_[h].push_back(v);
    adj_[v].push_back(h);
    ++chi_;
  }

  void finalize() {
    for (auto& n : adj_) std::sort(n.begin(), n.end());
  }

 private:
  std::vector<Rect>                rects_;
  std::vector<std::vector<RectId>> adj_;
  std::size_t                      num_h_ = 0;
  std::size_t                      chi_ = 0;
};

/// Builds the graph by sweeping middle segments left to right: horizontal
/// middle segments enter and leave an active set keyed by y, each vertical
/// middle segment reports the active ones inside its y-range.
inline OrientedGraph build_graph(const Decomposition& h, const Decomposition& v) {
  OrientedGraph g(h, v);
  const auto    nh = static_cast<RectId>(h.size());

  // kind: 0 = insert, 1 = query, 2 = erase; closed intervals, so inserts first.
  struct Event {
    Coord  x;
    int    kind;
    RectId id;
  };
  std::vector<Event> events;
  events.reserve(2 * h.size() + v.size());
  for (const auto& r : h.rects) {
    const auto s = middle_segment(r);
    events.push_back({s.lo, 0, r.id});
    events.push_back({s.hi, 2, r.id});
  }
  for (const auto& r : v.rects) events.push_back({middle_segment(r).fixed, 1, r.id});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.x != b.x ? a.x < b.x : a.kind < b.kind;
  });

  std::set<std::pair<Coord, RectId>> active;
  for (const auto& e : events) {
    if (e.kind == 0) {
      active.emplace(middle_segment(h.rects[e.id]).fixed, e.id);
    } else if (e.kind == 2) {
      active.erase({middle_segment(h.rects[e.id]).fixed, e.id});
    } else {
      const auto s = middle_segment(v.rects[e.id]);
      for (auto it = active.lower_bound({s.lo, 0});
           it != active.end() && it->first <= s.hi; ++it) {
        g.add_edge(it->second, nh + e.id);
      }
    }
  }
  g.finalize();
  return g;
}

/// Quadratic reference construction by direct area test.
inline OrientedGraph build_graph_quadratic(const Decomposition& h, const Decomposition& v) {
  OrientedGraph g(h, v);
  const auto    nh = static_cast<RectId>(h.size());
  for (const auto& a : h.rects) {
    for (const auto& b : v.rects) {
      if (overlaps(a, b)) g.add_edge(a.id, nh + b.id);
    }
  }
  g.finalize();
  return g;
}

using Dist = std::uint16_t;

/// Dense symmetric table of oriented distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t m) : m_(m), data_(m * m, 0) {}

  [[nodiscard]] std::size_t size() const { return m_; }
  [[nodiscard]] Dist        operator()(RectId i, RectId j) const { return data_[i * m_ + j]; }
  [[nodiscard]] std::span<const Dist> row(RectId i) const {
    return {data_.data() + i * m_, m_};
  }
  [[nodiscard]] std::span<Dist> row(RectId i) { return {data_.data() + i * m_, m_}; }

 private:
  std::size_t       m_ = 0;
  std::vector<Dist> data_;
};

/// Oriented distances from i into `out` (size m). Throws if the graph is
/// disconnected.
inline void bfs_into(const OrientedGraph& g, RectId i, std::span<Dist> out,
                     std::vector<RectId>& queue) {
  std::fill(out.begin(), out.end(), Dist{0});
  queue.clear();
  queue.push_back(i);
  out[i] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const RectId u = queue[head];
    for (RectId w : g.neighbors(u)) {
      if (out[w] == 0) {
        out[w] = static_cast<Dist>(out[u] + 1);
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != g.size()) throw std::logic_error("graph of oriented distances is disconnected");
}

inline std::vector<Dist> bfs_from(const OrientedGraph& g, RectId i) {
  std::vector<Dist>   row(g.size());
  std::vector<RectId> queue;
  queue.reserve(g.size());
  bfs_into(g, i, row, queue);
  return row;
}

inline DistanceMatrix all_pairs(const OrientedGraph& g) {
  if (g.size() + 1 > std::numeric_limits<Dist>::max()) {
    throw std::length_error("too many rectangles for 16-bit distances");
  }
  DistanceMatrix      dm(g.size());
  std::vector<RectId> queue;
  queue.reserve(g.size());
  for (RectId i = 0; i < g.size(); ++i) bfs_into(g, i, dm.row(i), queue);
  return dm;
}

struct GraphSummary {
  Dist   ordiam = 0;  // max oriented distance
  Dist   orrad = 0;   // min over rows of the row max
  RectId far_a = 0;   // first pair (lexicographic) at ordiam
  RectId far_b = 0;
  RectId center = 0;  // first row attaining orrad
  std::vector<Dist> row_max;
};

inline GraphSummary summarize(const DistanceMatrix& dm) {
  GraphSummary s;
  s.orrad = std::numeric_limits<Dist>::max();
  s.row_max.resize(dm.size());
  for (RectId i = 0; i < dm.size(); ++i) {
    const auto row = dm.row(i);
    Dist       mx = 0;
    for (RectId j = 0; j < dm.size(); ++j) {
      if (row[j] > mx) mx = row[j];
      if (row[j] > s.ordiam) {
        s.ordiam = row[j];
        s.far_a = i;
        s.far_b = j;
      }
    }
    s.row_max[i] = mx;
    if (mx < s.orrad) {
      s.orrad = mx;
      s.center = i;
    }
  }
  return s;
}

/// Rectangles at oriented distance exactly t from i.
inline std::vector<RectId> far_set(const DistanceMatrix& dm, RectId i, Dist t) {
  std::vector<RectId> out;
  const auto          row = dm.row(i);
  for (RectId j = 0; j < dm.size(); ++j) {
    if (row[j] == t) out.push_back(j);
  }
  return out;
}

}  // namespace rlink
