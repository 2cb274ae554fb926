#pragma once

// Rectilinear polygonal domain: rings, ingest, validation.
//
// All coordinates stored in a Domain are the input coordinates multiplied by
// two, so that midpoints of rectangles built from vertex coordinates are
// integers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace rlink {

using Coord = std::int64_t;

/// Largest admissible magnitude of an input coordinate; doubled values stay
/// within 2^30 so products of two coordinates fit comfortably in 64 bits.
inline constexpr Coord kMaxInputCoord = Coord{1} << 29;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Axis : std::uint8_t { horizontal, vertical };

inline Axis other(Axis a) {
  return a == Axis::horizontal ? Axis::vertical : Axis::horizontal;
}

inline const char* to_string(Axis a) {
  return a == Axis::horizontal ? "horizontal" : "vertical";
}

/// Thrown for malformed instance documents and points outside the domain.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed rectilinear ring, last vertex implicitly joined to the first.
struct Ring {
  std::vector<Point> vertices;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  [[nodiscard]] const Point& at(std::size_t i) const {
    return vertices[i % vertices.size()];
  }
};

/// Axis-parallel boundary edge with a <= b along its running axis.
struct Edge {
  Axis  axis;
  Coord fixed;  // y for horizontal edges, x for vertical ones
  Coord lo;
  Coord hi;
  std::size_t ring;
  std::size_t index;  // index of the start vertex within the ring
};

namespace detail {

// Twice the signed area; __int128 avoids overflow on long rings.
inline __int128 twice_signed_area(const Ring& r) {
  __int128 acc = 0;
  const auto n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = r.vertices[i];
    const Point& b = r.vertices[(i + 1) % n];
    acc += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(b.x) * a.y;
  }
  return acc;
}

}  // namespace detail

/// Polygonal domain: one outer ring (counterclockwise) and any number of
/// hole rings (clockwise). Coordinates are doubled input coordinates.
class Domain {
 public:
  Domain() = default;

  /// Builds a domain from input (undoubled) coordinates. Rings may come in
  /// any orientation. Throws input_error on diagonal edges or overflow.
  static Domain from_input(const std::vector<Point>&              outer,
                           const std::vector<std::vector<Point>>& holes) {
    Domain d;
    d.outer_ = ingest_ring(outer, true);
    for (const auto& h : holes) d.holes_.push_back(ingest_ring(h, false));
    return d;
  }

  [[nodiscard]] const Ring&              outer() const { return outer_; }
  [[nodiscard]] const std::vector<Ring>& holes() const { return holes_; }
  [[nodiscard]] std::size_t              hole_count() const { return holes_.size(); }

  [[nodiscard]] std::size_t vertex_count() const {
    std::size_t n = outer_.size();
    for (const auto& h : holes_) n += h.size();
    return n;
  }

  /// Ring k: 0 is the outer ring, k >= 1 is hole k-1.
  [[nodiscard]] const Ring& ring(std::size_t k) const {
    return k == 0 ? outer_ : holes_[k - 1];
  }
  [[nodiscard]] std::size_t ring_count() const { return 1 + holes_.size(); }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertex_count());
    for (std::size_t k = 0; k < ring_count(); ++k) {
      const Ring& r = ring(k);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Point& a = r.at(i);
        const Point& b = r.at(i + 1);
        if (a.y == b.y) {
          out.push_back({Axis::horizontal, a.y, std::min(a.x, b.x), std::max(a.x, b.x), k, i});
        } else {
          out.push_back({Axis::vertical, a.x, std::min(a.y, b.y), std::max(a.y, b.y), k, i});
        }
      }
    }
    return out;
  }

  /// Exact area in doubled units (i.e. four times the input area).
  [[nodiscard]] __int128 area() const {
    __int128 a = detail::twice_signed_area(outer_);
    for (const auto& h : holes_) a += detail::twice_signed_area(h);
    return a / 2;
  }

  /// Domain with x and y exchanged; orientation re-normalized.
  [[nodiscard]] Domain transposed() const {
    Domain d;
    auto flip = [](const Ring& r, bool ccw) {
      Ring out;
      out.vertices.reserve(r.size());
      for (const auto& p : r.vertices) out.vertices.push_back({p.y, p.x});
      orient(out, ccw);
      return out;
    };
    d.outer_ = flip(outer_, true);
    for (const auto& h : holes_) d.holes_.push_back(flip(h, false));
    return d;
  }

 private:
  static void orient(Ring& r, bool ccw) {
    const bool is_ccw = detail::twice_signed_area(r) > 0;
    if (is_ccw != ccw) std::reverse(r.vertices.begin(), r.vertices.end());
  }

  static Ring ingest_ring(const std::vector<Point>& pts, bool ccw) {
    if (pts.size() < 4) throw input_error("ring has fewer than 4 vertices");
    Ring r;
    r.vertices.reserve(pts.size());
    for (const auto& p : pts) {
      if (p.x > kMaxInputCoord || p.x < -kMaxInputCoord || p.y > kMaxInputCoord ||
          p.y < -kMaxInputCoord) {
        throw input_error("coordinate overflow");
      }
      r.vertices.push_back({2 * p.x, 2 * p.y});
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r.at(i);
      const Point& b = r.at(i + 1);
      if (a.x != b.x && a.y != b.y) throw input_error("non-rectilinear edge");
    }
    orient(r, ccw);
    return r;
  }

  Ring              outer_;
  std::vector<Ring> holes_;
};

// ---------------------------------------------------------------------------
// Instance JSON

inline std::vector<Point> parse_ring_json(const nlohmann::json& j) {
  if (!j.is_array()) throw input_error("syntax error: ring must be an array of [x,y] pairs");
  std::vector<Point> pts;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer()) {
      throw input_error("syntax error: vertex must be an [x,y] pair of integers");
    }
    pts.push_back({v[0].get<Coord>(), v[1].get<Coord>()});
  }
  return pts;
}

/// Parses `{"outer": [[x,y],...], "holes": [[[x,y],...],...]}`.
inline Domain parse_domain(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("outer")) {
    throw input_error("syntax error: missing \"outer\"");
  }
  std::vector<std::vector<Point>> holes;
  if (doc.contains("holes")) {
    if (!doc["holes"].is_array()) throw input_error("syntax error: \"holes\" must be an array");
    for (const auto& h : doc["holes"]) holes.push_back(parse_ring_json(h));
  }
  return Domain::from_input(parse_ring_json(doc["outer"]), holes);
}

/// Serializes back to input coordinates (halved).
inline nlohmann::json to_json(const Domain& d) {
  auto ring = [](const Ring& r) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : r.vertices) a.push_back({p.x / 2, p.y / 2});
    return a;
  };
  nlohmann::json holes = nlohmann::json::array();
  for (const auto& h : d.holes()) holes.push_back(ring(h));
  return {{"outer", ring(d.outer())}, {"holes", holes}};
}

// ---------------------------------------------------------------------------
// Validation

enum class Violation : std::uint8_t {
  alternation,        // consecutive edges not alternating, or zero-length edge
  simplicity,         // ring self-intersects or self-touches
  containment,        // hole not strictly inside the outer ring, or nested
  disjointness,       // two rings touch or cross
  general_position,   // two vertices share a coordinate without an edge
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::alternation: return "alternation";
    case Violation::simplicity: return "simplicity";
    case Violation::containment: return "containment";
    case Violation::disjointness: return "disjointness";
    case Violation::general_position: return "general position";
  }
  return "?";
}

struct ValidationIssue {
  Violation   kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  [[nodiscard]] bool ok() const { return issues.empty(); }
  [[nodiscard]] bool has(Violation v) const {
    return std::any_of(issues.begin(), issues.end(),
                       [v](const ValidationIssue& i) { return i.kind == v; });
  }
};

namespace detail {

// Closed axis-parallel segments share at least one point.
inline bool touches(const Edge& a, const Edge& b) {
  if (a.axis == b.axis) {
    return a.fixed == b.fixed && a.lo <= b.hi && b.lo <= a.hi;
  }
  const Edge& h = a.axis == Axis::horizontal ? a : b;
  const Edge& v = a.axis == Axis::horizontal ? b : a;
  return h.lo <= v.fixed && v.fixed <= h.hi && v.lo <= h.fixed && h.fixed <= v.hi;
}

// Strict interior test by ray casting to +x; the caller guarantees p is not on
// the ring.
inline bool strictly_inside(const Ring& r, Point p) {
  bool inside = false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Point& a = r.at(i);
    const Point& b = r.at(i + 1);
    if (a.x != b.x) continue;
    const Coord lo = std::min(a.y, b.y);
    const Coord hi = std::max(a.y, b.y);
    // half-open in y so that vertices are counted once
    if (a.x > p.x && lo <= p.y && p.y < hi) inside = !inside;
  }
  return inside;
}

inline bool on_ring(const Ring& r, Point p) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Point& a = r.at(i);
    const Point& b = r.at(i + 1);
    if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y)) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Lists every violated domain invariant. Quadratic in the vertex count.
inline ValidationReport validate(const Domain& d) {
  ValidationReport rep;
  auto add = [&rep](Violation v, std::string msg) { rep.issues.push_back({v, std::move(msg)}); };

  for (std::size_t k = 0; k < d.ring_count(); ++k) {
    const Ring& r = d.ring(k);
    const std::string name = k == 0 ? "outer ring" : "hole " + std::to_string(k - 1);
    if (r.size() % 2 != 0) add(Violation::alternation, name + ": odd vertex count");
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r.at(i);
      const Point& b = r.at(i + 1);
      const Point& c = r.at(i + 2);
      if (a == b) {
        add(Violation::alternation, name + ": zero-length edge at vertex " + std::to_string(i));
        continue;
      }
      if (b == c) continue;
      const bool ab_h = a.y == b.y;
      const bool bc_h = b.y == c.y;
      if (ab_h == bc_h) {
        add(Violation::alternation,
            name + ": edges at vertex " + std::to_string((i + 1) % r.size()) + " do not alternate");
      }
    }
  }
  if (rep.has(Violation::alternation)) return rep;

  const auto edges = d.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Edge& ea = edges[a];
      const Edge& eb = edges[b];
      if (!detail::touches(ea, eb)) continue;
      if (ea.ring == eb.ring) {
        const std::size_t n = d.ring(ea.ring).size();
        const bool adjacent = (ea.index + 1) % n == eb.index || (eb.index + 1) % n == ea.index;
        if (adjacent && ea.axis != eb.axis) continue;
        add(Violation::simplicity, "ring " + std::to_string(ea.ring) + ": edges " +
                                       std::to_string(ea.index) + " and " +
                                       std::to_string(eb.index) + " intersect");
      } else {
        add(Violation::disjointness, "rings " + std::to_string(ea.ring) + " and " +
                                         std::to_string(eb.ring) + " touch");
      }
    }
  }

  // With no boundary contacts, containment reduces to one vertex per hole.
  if (!rep.has(Violation::disjointness)) {
    for (std::size_t k = 0; k < d.hole_count(); ++k) {
      const Point p = d.holes()[k].vertices.front();
      if (!detail::strictly_inside(d.outer(), p)) {
        add(Violation::containment, "hole " + std::to_string(k) + " is not inside the outer ring");
      }
      for (std::size_t o = 0; o < d.hole_count(); ++o) {
        if (o != k && detail::strictly_inside(d.holes()[o], p)) {
          add(Violation::containment,
              "hole " + std::to_string(k) + " is nested in hole " + std::to_string(o));
        }
      }
    }
  }

  // Every vertex has exactly one vertical edge, so general position means
  // each x-coordinate carries exactly one vertical edge (and likewise for y).
  std::map<Coord, int> xs;
  std::map<Coord, int> ys;
  for (const auto& e : edges) (e.axis == Axis::vertical ? xs : ys)[e.fixed] += 1;
  for (const auto& [x, c] : xs) {
    if (c > 1) {
      add(Violation::general_position,
          "x = " + std::to_string(x / 2) + " is shared by " + std::to_string(c) + " vertical edges");
    }
  }
  for (const auto& [y, c] : ys) {
    if (c > 1) {
      add(Violation::general_position,
          "y = " + std::to_string(y / 2) + " is shared by " + std::to_string(c) +
              " horizontal edges");
    }
  }
  return rep;
}

/// True when p lies in the closed domain.
inline bool contains(const Domain& d, Point p) {
  for (std::size_t k = 0; k < d.ring_count(); ++k) {
    if (detail::on_ring(d.ring(k), p)) return true;
  }
  if (!detail::strictly_inside(d.outer(), p)) return false;
  for (const auto& h : d.holes()) {
    if (detail::strictly_inside(h, p)) return false;
  }
  return true;
}

}  // namespace rlink
