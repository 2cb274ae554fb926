#pragma once

// Link distance between points, and link diameter / radius of a domain from
// its graph of oriented distances.
//
// Diameter: with D = max oriented distance, the answer is D-1 exactly when
// there are crossing pairs (i,i') and (j,j') with d(i,j) = d(i',j') = D, and
// D-2 otherwise. Radius: with R = min-max oriented distance, the answer is
// R-1 exactly when every crossing pair (i,i') has a crossing pair (j,j') with
// d(i,j) >= R and d(i',j') >= R, and R-2 otherwise. Both hold once the
// reference value is at least 4; below that the exact face enumeration in
// small_case_fallback is used.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rlink/bit_matrix.hpp"
#include "rlink/crossing_store.hpp"
#include "rlink/graph.hpp"

namespace rlink {

enum class Engine : std::uint8_t { edge_scan, matmul, fast, fallback, oracle };

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::edge_scan: return "edge-scan";
    case Engine::matmul: return "matmul";
    case Engine::fast: return "fast";
    case Engine::fallback: return "fallback";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

inline Engine parse_engine(const std::string& s) {
  if (s == "edge-scan") return Engine::edge_scan;
  if (s == "matmul") return Engine::matmul;
  if (s == "fast") return Engine::fast;
  if (s == "fallback") return Engine::fallback;
  if (s == "oracle") return Engine::oracle;
  throw std::invalid_argument("unknown engine: " + s);
}

/// Smallest oriented diameter / radius for which the closed forms apply.
inline constexpr Dist kTheoremThreshold = 4;

/// Thrown when an engine is asked for an instance below its validity range.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DiameterResult {
  int                 value = 0;
  Point               p;
  Point               q;
  std::vector<RectId> witness_rects;  // (i, i', j, j') or (i, j)
  Engine              engine = Engine::edge_scan;
  bool                routed_to_fallback = false;
};

struct RadiusResult {
  int                 value = 0;
  Point               center;
  std::vector<RectId> witness;  // failing crossing pair, or the center rectangle(s)
  Engine              engine = Engine::edge_scan;
  bool                routed_to_fallback = false;
};

// ---------------------------------------------------------------------------
// Point distance

/// Link distance between two points of the domain. Every rectangle whose
/// closure holds a point counts as containing it.
inline int point_distance(const OrientedGraph& g, const DistanceMatrix& dm, Point p, Point q) {
  std::vector<RectId> pr;
  std::vector<RectId> qr;
  for (const auto& r : g.rects()) {
    if (r.contains(p)) pr.push_back(r.id);
    if (r.contains(q)) qr.push_back(r.id);
  }
  if (pr.empty() || qr.empty()) throw input_error("point outside the domain");
  if (p == q) return 0;
  for (RectId a : pr) {
    if (std::find(qr.begin(), qr.end(), a) != qr.end()) {
      return (p.x == q.x || p.y == q.y) ? 1 : 2;
    }
  }
  int best = std::numeric_limits<int>::max();
  for (RectId a : pr) {
    for (RectId b : qr) best = std::min(best, static_cast<int>(dm(a, b)));
  }
  return best;
}

/// Largest of the four oriented distances between the rectangle pairs of
/// two points; the link distance lies in [span - 2, span - 1].
inline int oriented_span(const DistanceMatrix& dm, std::pair<RectId, RectId> p_rects,
                         std::pair<RectId, RectId> q_rects) {
  const auto [i, ip] = p_rects;
  const auto [j, jp] = q_rects;
  if (i == j || i == jp || ip == j || ip == jp) {
    throw precondition_error("oriented_span: points share a rectangle");
  }
  return std::max({dm(i, j), dm(i, jp), dm(ip, j), dm(ip, jp)});
}

// ---------------------------------------------------------------------------
// Witness helpers

/// Center of the first overlay face of rectangle i.
inline Point any_face_center(const OrientedGraph& g, RectId i) {
  return g.face(i, g.neighbors(i).front()).center();
}

inline DiameterResult far_pair_diameter(const OrientedGraph& g, const GraphSummary& s,
                                        Engine engine) {
  DiameterResult r;
  r.engine = engine;
  r.value = s.ordiam - 2;
  r.witness_rects = {s.far_a, s.far_b};
  r.p = any_face_center(g, s.far_a);
  r.q = any_face_center(g, s.far_b);
  return r;
}

inline DiameterResult quadruple_diameter(const OrientedGraph& g, const GraphSummary& s,
                                         Engine engine, RectId i, RectId ip, RectId j, RectId jp) {
  DiameterResult r;
  r.engine = engine;
  r.value = s.ordiam - 1;
  r.witness_rects = {i, ip, j, jp};
  r.p = g.face(i, ip).center();
  r.q = g.face(j, jp).center();
  return r;
}

inline RadiusResult covered_radius(const OrientedGraph& g, const GraphSummary& s, Engine engine) {
  RadiusResult r;
  r.engine = engine;
  r.value = s.orrad - 1;
  r.witness = {s.center};
  r.center = any_face_center(g, s.center);
  return r;
}

inline RadiusResult failing_edge_radius(const OrientedGraph& g, const GraphSummary& s,
                                        Engine engine, RectId i, RectId ip) {
  RadiusResult r;
  r.engine = engine;
  r.value = s.orrad - 2;
  r.witness = {i, ip};
  r.center = g.face(i, ip).center();
  return r;
}

inline void require_diameter_range(const GraphSummary& s) {
  if (s.ordiam < kTheoremThreshold) {
    throw precondition_error("oriented diameter " + std::to_string(s.ordiam) +
                             " is below 4; use small_case_fallback");
  }
}

inline void require_radius_range(const GraphSummary& s) {
  if (s.orrad < kTheoremThreshold) {
    throw precondition_error("oriented radius " + std::to_string(s.orrad) +
                             " is below 4; use small_case_fallback");
  }
}

// ---------------------------------------------------------------------------
// Edge-pair scan, O(chi^2)

inline DiameterResult diameter_edge_scan(const OrientedGraph& g, const DistanceMatrix& dm,
                                         const GraphSummary& s) {
  require_diameter_range(s);
  const Dist D = s.ordiam;
  const auto edges = g.edges();
  for (const auto& [a, b] : edges) {
    for (const auto& [c, d] : edges) {
      if (dm(a, c) == D && dm(b, d) == D) return quadruple_diameter(g, s, Engine::edge_scan, a, b, c, d);
      if (dm(a, d) == D && dm(b, c) == D) return quadruple_diameter(g, s, Engine::edge_scan, a, b, d, c);
    }
  }
  return far_pair_diameter(g, s, Engine::edge_scan);
}

inline RadiusResult radius_edge_scan(const OrientedGraph& g, const DistanceMatrix& dm,
                                     const GraphSummary& s) {
  require_radius_range(s);
  const Dist R = s.orrad;
  const auto edges = g.edges();
  for (const auto& [a, b] : edges) {
    bool found = false;
    for (const auto& [c, d] : edges) {
      if ((dm(a, c) >= R && dm(b, d) >= R) || (dm(a, d) >= R && dm(b, c) >= R)) {
        found = true;
        break;
      }
    }
    if (!found) return failing_edge_radius(g, s, Engine::edge_scan, a, b);
  }
  return covered_radius(g, s, Engine::edge_scan);
}

// ---------------------------------------------------------------------------
// Boolean matrix products

inline BitMatrix crossing_matrix(const OrientedGraph& g) {
  BitMatrix I(g.size());
  for (RectId i = 0; i < g.size(); ++i) {
    for (RectId j : g.neighbors(i)) I.set(i, j);
  }
  return I;
}

template <typename Pred>
BitMatrix distance_mask(const DistanceMatrix& dm, Pred pred) {
  BitMatrix out(dm.size());
  for (RectId i = 0; i < dm.size(); ++i) {
    const auto row = dm.row(i);
    for (RectId j = 0; j < dm.size(); ++j) {
      if (pred(row[j])) out.set(i, j);
    }
  }
  return out;
}

inline DiameterResult diameter_matmul(const OrientedGraph& g, const DistanceMatrix& dm,
                                      const GraphSummary& s) {
  require_diameter_range(s);
  const Dist D = s.ordiam;
  const auto I = crossing_matrix(g);
  const auto Dm = distance_mask(dm, [D](Dist v) { return v == D; });
  const auto M = bool_product(I, Dm);
  const auto DM = bool_product(Dm, M);
  const auto m = g.size();
  for (RectId i = 0; i < m; ++i) {
    for (RectId ip : g.neighbors(i)) {
      if (!DM.get(i, ip)) continue;
      // DM(i,i') = OR_j D(i,j) M(j,i'),  M(j,i') = OR_j' I(j,j') D(j',i')
      for (RectId j = 0; j < m; ++j) {
        if (!Dm.get(i, j) || !M.get(j, ip)) continue;
        for (RectId jp : g.neighbors(j)) {
          if (Dm.get(jp, ip)) return quadruple_diameter(g, s, Engine::matmul, i, ip, j, jp);
        }
      }
      throw std::logic_error("diameter_matmul: back-trace failed");
    }
  }
  return far_pair_diameter(g, s, Engine::matmul);
}

inline RadiusResult radius_matmul(const OrientedGraph& g, const DistanceMatrix& dm,
                                  const GraphSummary& s) {
  require_radius_range(s);
  const Dist R = s.orrad;
  const auto I = crossing_matrix(g);
  const auto Rm = distance_mask(dm, [R](Dist v) { return v >= R; });
  const auto N = bool_product(I, Rm);
  const auto RN = bool_product(Rm, N);
  for (RectId i = 0; i < g.size(); ++i) {
    for (RectId ip : g.neighbors(i)) {
      if (!RN.get(i, ip)) return failing_edge_radius(g, s, Engine::matmul, std::min(i, ip), std::max(i, ip));
    }
  }
  return covered_radius(g, s, Engine::matmul);
}

// ---------------------------------------------------------------------------
// Diameter via the pair set T = {(i',j') : i' x i, j' x j, d(i,j) = D}

namespace detail {

inline std::vector<StoredSegment> middle_segments(const OrientedGraph& g, Axis orientation) {
  std::vector<StoredSegment> out;
  for (const auto& r : g.rects()) {
    if (r.orientation == orientation) out.push_back({middle_segment(r), r.id});
  }
  return out;
}

// Crossing neighbors of all of `from` (which share one orientation), each
// reported once. The store is restored before returning.
inline std::vector<RectId> union_of_covers(const OrientedGraph& g, CrossingStore& store,
                                           const std::vector<RectId>& from) {
  std::vector<StoredSegment> popped;
  for (RectId j : from) {
    auto hits = store.pop_crossing(middle_segment(g.rect(j)));
    popped.insert(popped.end(), hits.begin(), hits.end());
  }
  std::vector<RectId> ids;
  ids.reserve(popped.size());
  for (const auto& s : popped) {
    ids.push_back(s.owner);
    store.insert(s);
  }
  return ids;
}

}  // namespace detail

/// Per-rectangle state of diameter_fast, kept for inspection by tests.
struct FastDiameterState {
  std::vector<std::vector<RectId>> far;       // S_i
  std::vector<std::vector<RectId>> covers;    // C_i
  std::vector<std::vector<RectId>> reverse;   // L_k
  std::size_t                      pairs_tested = 0;
};

inline DiameterResult diameter_fast(const OrientedGraph& g, const DistanceMatrix& dm,
                                    const GraphSummary& s, FastDiameterState* state = nullptr) {
  require_diameter_range(s);
  const Dist D = s.ordiam;
  const auto m = static_cast<RectId>(g.size());

  CrossingStore h_store(Axis::horizontal, detail::middle_segments(g, Axis::horizontal));
  CrossingStore v_store(Axis::vertical, detail::middle_segments(g, Axis::vertical));
  auto store_for = [&](Axis members) -> CrossingStore& {
    return members == Axis::horizontal ? v_store : h_store;
  };

  FastDiameterState local;
  FastDiameterState& st = state != nullptr ? *state : local;
  st = {};
  st.far.resize(m);
  st.covers.resize(m);
  st.reverse.resize(m);

  for (RectId i = 0; i < m; ++i) {
    st.far[i] = far_set(dm, i, D);
    if (st.far[i].empty()) continue;
    // d(i,j) has the parity of "same orientation", so S_i is single-oriented.
    st.covers[i] = detail::union_of_covers(g, store_for(g.orientation(st.far[i].front())), st.far[i]);
    for (RectId k : st.covers[i]) st.reverse[k].push_back(i);
  }

  for (RectId jp = 0; jp < m; ++jp) {
    const auto& L = st.reverse[jp];
    if (L.empty()) continue;
    const auto D_jp = detail::union_of_covers(g, store_for(g.orientation(L.front())), L);
    for (RectId ip : D_jp) {
      ++st.pairs_tested;
      if (dm(ip, jp) != D) continue;
      for (RectId i : L) {
        if (!g.adjacent(i, ip)) continue;
        for (RectId j : st.far[i]) {
          if (g.adjacent(j, jp)) return quadruple_diameter(g, s, Engine::fast, i, ip, j, jp);
        }
      }
      throw std::logic_error("diameter_fast: witness recovery failed");
    }
  }
  return far_pair_diameter(g, s, Engine::fast);
}

// ---------------------------------------------------------------------------
// Exact enumeration over overlay faces, for small oriented diameter / radius

struct FaceTable {
  std::vector<std::pair<RectId, RectId>> faces;  // (h, v)
  std::vector<int>                       row_max; // max(2, max distance to any face)
};

/// Link distance between generic interior points of two overlay faces.
inline int face_distance(const DistanceMatrix& dm, std::pair<RectId, RectId> a,
                         std::pair<RectId, RectId> b) {
  if (a.first == b.first || a.second == b.second) return 2;
  return std::min({dm(a.first, b.first), dm(a.first, b.second), dm(a.second, b.first),
                   dm(a.second, b.second)});
}

inline FaceTable face_table(const OrientedGraph& g, const DistanceMatrix& dm) {
  FaceTable t;
  t.faces = g.edges();
  t.row_max.assign(t.faces.size(), 2);
  for (std::size_t a = 0; a < t.faces.size(); ++a) {
    for (std::size_t b = a + 1; b < t.faces.size(); ++b) {
      const int v = face_distance(dm, t.faces[a], t.faces[b]);
      t.row_max[a] = std::max(t.row_max[a], v);
      t.row_max[b] = std::max(t.row_max[b], v);
    }
  }
  return t;
}

inline DiameterResult fallback_diameter(const OrientedGraph& g, const DistanceMatrix& dm) {
  const auto t = face_table(g, dm);
  DiameterResult r;
  r.engine = Engine::fallback;
  r.value = 2;
  std::size_t fa = 0;
  std::size_t fb = 0;
  for (std::size_t a = 0; a < t.faces.size(); ++a) {
    for (std::size_t b = a + 1; b < t.faces.size(); ++b) {
      const int v = face_distance(dm, t.faces[a], t.faces[b]);
      if (v > r.value) {
        r.value = v;
        fa = a;
        fb = b;
      }
    }
  }
  const auto& A = t.faces[fa];
  const auto& B = t.faces[fb];
  if (r.value > 2) {
    r.witness_rects = {A.first, A.second, B.first, B.second};
    r.p = g.face(A.first, A.second).center();
    r.q = g.face(B.first, B.second).center();
  } else {
    // center and corner of one face differ in both coordinates
    const Rect f = g.face(A.first, A.second);
    r.witness_rects = {A.first, A.second};
    r.p = f.center();
    r.q = {f.xmin, f.ymin};
  }
  return r;
}

inline RadiusResult fallback_radius(const OrientedGraph& g, const DistanceMatrix& dm) {
  const auto t = face_table(g, dm);
  const auto best = static_cast<std::size_t>(
      std::min_element(t.row_max.begin(), t.row_max.end()) - t.row_max.begin());
  RadiusResult r;
  r.engine = Engine::fallback;
  r.value = t.row_max[best];
  r.witness = {t.faces[best].first, t.faces[best].second};
  r.center = g.face(t.faces[best].first, t.faces[best].second).center();
  return r;
}

enum class Measure : std::uint8_t { diameter, radius };

struct FallbackResult {
  DiameterResult diameter;
  RadiusResult   radius;
};

inline FallbackResult small_case_fallback(const OrientedGraph& g, const DistanceMatrix& dm,
                                          Measure which) {
  FallbackResult out;
  if (which == Measure::diameter) {
    out.diameter = fallback_diameter(g, dm);
  } else {
    out.radius = fallback_radius(g, dm);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Routing

/// Runs `engine`, or the fallback when the oriented diameter is below 4; the
/// result then carries routed_to_fallback.
inline DiameterResult compute_diameter(const OrientedGraph& g, const DistanceMatrix& dm,
                                       const GraphSummary& s, Engine engine) {
  if (engine == Engine::fallback) return fallback_diameter(g, dm);
  if (s.ordiam < kTheoremThreshold) {
    auto r = fallback_diameter(g, dm);
    r.routed_to_fallback = true;
    return r;
  }
  switch (engine) {
    case Engine::edge_scan: return diameter_edge_scan(g, dm, s);
    case Engine::matmul: return diameter_matmul(g, dm, s);
    case Engine::fast: return diameter_fast(g, dm, s);
    default: throw std::invalid_argument(std::string("no diameter engine ") + to_string(engine));
  }
}

inline RadiusResult compute_radius(const OrientedGraph& g, const DistanceMatrix& dm,
                                   const GraphSummary& s, Engine engine) {
  if (engine == Engine::fallback) return fallback_radius(g, dm);
  if (s.orrad < kTheoremThreshold) {
    auto r = fallback_radius(g, dm);
    r.routed_to_fallback = true;
    return r;
  }
  switch (engine) {
    case Engine::edge_scan: return radius_edge_scan(g, dm, s);
    case Engine::matmul: return radius_matmul(g, dm, s);
    default: throw std::invalid_argument(std::string("no radius engine ") + to_string(engine));
  }
}

}  // namespace rlink
