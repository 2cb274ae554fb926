#pragma once

// Random rectilinear domains with holes, in general position by construction.
//
// A polyomino is grown on a grid, holes are punched into its deep interior,
// and the boundary loops are traced. Every maximal boundary edge on grid line
// i is then moved to i*L + (a distinct offset in (0, L/2)), so no two edges
// share a coordinate while the cell topology is unchanged.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rlink/domain.hpp"

namespace rlink {

struct GenParams {
  int           width = 8;
  int           height = 8;
  int           cells = 40;
  int           holes = 1;
  Coord         scale = 0;  // L; 0 picks the smallest admissible value
  std::uint64_t seed = 1;
  int           max_hole_cells = 4;
  int           sparsity = 0;  // percent; higher favors thin, branching shapes
};

class infeasible_params : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class CellGrid {
 public:
  CellGrid(int w, int h) : w_(w), h_(h), cells_(static_cast<std::size_t>(w * h), 0) {}

  [[nodiscard]] int  width() const { return w_; }
  [[nodiscard]] int  height() const { return h_; }
  [[nodiscard]] bool in_range(int x, int y) const { return x >= 0 && y >= 0 && x < w_ && y < h_; }
  [[nodiscard]] bool filled(int x, int y) const { return in_range(x, y) && cells_[idx(x, y)] != 0; }
  void set(int x, int y, bool v) { cells_[idx(x, y)] = v ? 1 : 0; }

  [[nodiscard]] int count() const {
    int c = 0;
    for (auto v : cells_) c += v;
    return c;
  }

  // Two filled cells meeting only at a corner make the boundary touch itself.
  [[nodiscard]] bool pinch_at(int x, int y) const {
    const bool a = filled(x, y);
    const bool b = filled(x + 1, y);
    const bool c = filled(x, y + 1);
    const bool d = filled(x + 1, y + 1);
    return (a && d && !b && !c) || (b && c && !a && !d);
  }

  [[nodiscard]] bool has_pinch() const {
    for (int y = -1; y < h_; ++y) {
      for (int x = -1; x < w_; ++x) {
        if (pinch_at(x, y)) return true;
      }
    }
    return false;
  }

  [[nodiscard]] bool connected() const {
    const int total = count();
    if (total == 0) return false;
    std::vector<std::uint8_t>         seen(cells_.size(), 0);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < h_ && stack.empty(); ++y) {
      for (int x = 0; x < w_ && stack.empty(); ++x) {
        if (filled(x, y)) stack.emplace_back(x, y);
      }
    }
    seen[idx(stack[0].first, stack[0].second)] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const auto [x, y] = stack.back();
      stack.pop_back();
      ++reached;
      for (const auto& [dx, dy] : kDirs) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (filled(nx, ny) && !seen[idx(nx, ny)]) {
          seen[idx(nx, ny)] = 1;
          stack.emplace_back(nx, ny);
        }
      }
    }
    return reached == total;
  }

  // Empty cells not 4-connected to the outside of the grid.
  [[nodiscard]] std::vector<std::pair<int, int>> enclosed_empty() const {
    const int                        pw = w_ + 2;
    const int                        ph = h_ + 2;
    std::vector<std::uint8_t>        seen(static_cast<std::size_t>(pw * ph), 0);
    std::vector<std::pair<int, int>> stack{{-1, -1}};
    seen[0] = 1;
    while (!stack.empty()) {
      const auto [x, y] = stack.back();
      stack.pop_back();
      for (const auto& [dx, dy] : kDirs) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (nx < -1 || ny < -1 || nx > w_ || ny > h_) continue;
        const auto k = static_cast<std::size_t>((ny + 1) * pw + (nx + 1));
        if (seen[k] || filled(nx, ny)) continue;
        seen[k] = 1;
        stack.emplace_back(nx, ny);
      }
    }
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < h_; ++y) {
      for (int x = 0; x < w_; ++x) {
        if (!filled(x, y) && !seen[static_cast<std::size_t>((y + 1) * pw + (x + 1))]) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  static constexpr std::pair<int, int> kDirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

 private:
  [[nodiscard]] std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y * w_ + x); }

  int                       w_;
  int                       h_;
  std::vector<std::uint8_t> cells_;
};

// Bounded draw without the implementation-defined std distributions, so a
// seed gives the same domain with every standard library.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Randomized frontier growth. With sparsity > 0 a frontier cell touching two
// or more filled cells is passed over with that percent chance, which keeps
// the shape thin; runs of rejections are capped so growth cannot stall.
inline void grow_polyomino(CellGrid& g, int target, int sparsity, std::mt19937_64& rng) {
  const int sx = static_cast<int>(draw(rng, static_cast<std::uint64_t>(g.width())));
  const int sy = static_cast<int>(draw(rng, static_cast<std::uint64_t>(g.height())));
  g.set(sx, sy, true);
  std::vector<std::pair<int, int>> frontier;
  auto push_neighbors = [&](int x, int y) {
    for (const auto& [dx, dy] : CellGrid::kDirs) {
      if (g.in_range(x + dx, y + dy) && !g.filled(x + dx, y + dy)) frontier.emplace_back(x + dx, y + dy);
    }
  };
  auto filled_around = [&](int x, int y) {
    int c = 0;
    for (const auto& [dx, dy] : CellGrid::kDirs) c += g.filled(x + dx, y + dy) ? 1 : 0;
    return c;
  };
  push_neighbors(sx, sy);
  int         filled = 1;
  std::size_t rejects = 0;
  while (filled < target && !frontier.empty()) {
    const auto k = draw(rng, frontier.size());
    const auto [x, y] = frontier[k];
    if (!g.filled(x, y) && sparsity > 0 && rejects < 8 * frontier.size() && filled_around(x, y) >= 2 &&
        draw(rng, 100) < static_cast<std::uint64_t>(sparsity)) {
      ++rejects;
      continue;
    }
    frontier[k] = frontier.back();
    frontier.pop_back();
    if (g.filled(x, y)) continue;
    rejects = 0;
    g.set(x, y, true);
    ++filled;
    push_neighbors(x, y);
  }
}

// Fills enclosed voids and corner pinches until neither remains.
inline void make_simple(CellGrid& g, std::mt19937_64& rng) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [x, y] : g.enclosed_empty()) {
      g.set(x, y, true);
      changed = true;
    }
    for (int y = -1; y < g.height() && !changed; ++y) {
      for (int x = -1; x < g.width() && !changed; ++x) {
        if (!g.pinch_at(x, y)) continue;
        std::vector<std::pair<int, int>> empty;
        for (const auto& [cx, cy] : {std::pair{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}}) {
          if (g.in_range(cx, cy) && !g.filled(cx, cy)) empty.emplace_back(cx, cy);
        }
        // a pinch always has an in-range empty cell: the filled pair is in range
        const auto [cx, cy] = empty[draw(rng, empty.size())];
        g.set(cx, cy, true);
        changed = true;
      }
    }
  }
}

// A hole cell needs all eight neighbors filled or already in the same hole.
inline bool deep(const CellGrid& g, int x, int y, const std::vector<std::pair<int, int>>& hole) {
  if (!g.filled(x, y)) return false;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const int nx = x + dx;
      const int ny = y + dy;
      if (g.filled(nx, ny)) continue;
      if (std::find(hole.begin(), hole.end(), std::pair{nx, ny}) == hole.end()) return false;
    }
  }
  return true;
}

inline bool punch_hole(CellGrid& g, int max_cells, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> seeds;
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (deep(g, x, y, {})) seeds.emplace_back(x, y);
    }
  }
  if (seeds.empty()) return false;
  std::vector<std::pair<int, int>> hole{seeds[draw(rng, seeds.size())]};
  g.set(hole[0].first, hole[0].second, false);
  const auto target = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(std::max(1, max_cells))));
  while (static_cast<int>(hole.size()) < target) {
    std::vector<std::pair<int, int>> cand;
    for (const auto& [x, y] : hole) {
      for (const auto& [dx, dy] : CellGrid::kDirs) {
        if (deep(g, x + dx, y + dy, hole)) cand.emplace_back(x + dx, y + dy);
      }
    }
    if (cand.empty()) break;
    const auto c = cand[draw(rng, cand.size())];
    g.set(c.first, c.second, false);
    hole.push_back(c);
  }
  if (g.connected() && !g.has_pinch()) return true;
  for (const auto& [x, y] : hole) g.set(x, y, true);
  return false;
}

// Boundary loops of the filled region, interior on the left, as corner lists
// in grid coordinates.
inline std::vector<std::vector<Point>> trace_loops(const CellGrid& g) {
  std::map<Point, Point> next;
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g.filled(x, y)) continue;
      if (!g.filled(x, y - 1)) next[{x, y}] = {x + 1, y};
      if (!g.filled(x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
      if (!g.filled(x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
      if (!g.filled(x - 1, y)) next[{x, y + 1}] = {x, y};
    }
  }
  std::vector<std::vector<Point>> loops;
  while (!next.empty()) {
    std::vector<Point> walk;
    const Point        start = next.begin()->first;
    Point              cur = start;
    do {
      walk.push_back(cur);
      const auto it = next.find(cur);
      const Point nxt = it->second;
      next.erase(it);
      cur = nxt;
    } while (cur != start);
    std::vector<Point> corners;
    const auto         n = walk.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = walk[(i + n - 1) % n];
      const Point& b = walk[i];
      const Point& c = walk[(i + 1) % n];
      const bool   straight = (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
      if (!straight) corners.push_back(b);
    }
    loops.push_back(std::move(corners));
  }
  return loops;
}

/// Domain bounded by the cell region's boundary loops, with every maximal
/// edge moved to its own coordinate (see the header comment). `scale` is L;
/// 0 picks 4 x (edges on the busiest grid line) + 4.
inline Domain domain_from_cells(const CellGrid& grid, Coord scale, std::mt19937_64& rng) {
  auto loops = trace_loops(grid);

  // Distinct coordinate per maximal edge: vertical edges keyed by grid x,
  // horizontal edges by grid y. Edge e of a loop runs from corner e to e+1.
  struct EdgeRef {
    std::size_t loop;
    std::size_t index;
  };
  std::map<Coord, std::vector<EdgeRef>> vlines;
  std::map<Coord, std::vector<EdgeRef>> hlines;
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& c = loops[l];
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point& a = c[i];
      const Point& b = c[(i + 1) % c.size()];
      (a.x == b.x ? vlines[a.x] : hlines[a.y]).push_back({l, i});
    }
  }
  std::size_t busiest = 1;
  for (const auto& [k, v] : vlines) busiest = std::max(busiest, v.size());
  for (const auto& [k, v] : hlines) busiest = std::max(busiest, v.size());
  const Coord L = scale > 0 ? scale : static_cast<Coord>(4 * busiest + 4);
  if (L <= static_cast<Coord>(4 * busiest)) {
    throw infeasible_params("scale must exceed 4 x (edges per grid line) = " +
                            std::to_string(4 * busiest));
  }

  std::vector<std::vector<Coord>> new_coord(loops.size());
  for (std::size_t l = 0; l < loops.size(); ++l) new_coord[l].resize(loops[l].size());
  auto assign = [&](std::map<Coord, std::vector<EdgeRef>>& lines) {
    for (auto& [line, refs] : lines) {
      // shuffle with the same bounded draw for portability
      for (std::size_t i = refs.size(); i > 1; --i) std::swap(refs[i - 1], refs[draw(rng, i)]);
      for (std::size_t r = 0; r < refs.size(); ++r) {
        new_coord[refs[r].loop][refs[r].index] = line * L + 1 + static_cast<Coord>(r);
      }
    }
  };
  assign(vlines);
  assign(hlines);

  // Corner i sits between edge i-1 and edge i; one is vertical, one horizontal.
  std::vector<Point>              outer;
  std::vector<std::vector<Point>> holes;
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto&        c = loops[l];
    const auto         n = c.size();
    std::vector<Point> ring(n);
    __int128           area2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      const bool        next_vertical = c[i].x == c[(i + 1) % n].x;
      const Coord       x = next_vertical ? new_coord[l][i] : new_coord[l][prev];
      const Coord       y = next_vertical ? new_coord[l][prev] : new_coord[l][i];
      ring[i] = {x, y};
      const Point& a = c[i];
      const Point& b = c[(i + 1) % n];
      area2 += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(b.x) * a.y;
    }
    if (area2 > 0) {
      outer = std::move(ring);
    } else {
      holes.push_back(std::move(ring));
    }
  }
  return Domain::from_input(outer, holes);
}

}  // namespace detail

/// Deterministic per params. Throws infeasible_params when the grid cannot
/// host the requested shape.
inline Domain gen_domain(const GenParams& p) {
  if (p.width < 1 || p.height < 1) throw infeasible_params("grid must be at least 1x1");
  if (p.cells < 1 || p.cells > p.width * p.height) {
    throw infeasible_params("cell count must be in [1, width*height]");
  }
  if (p.holes < 0) throw infeasible_params("negative hole count");

  std::mt19937_64  rng(p.seed);
  detail::CellGrid grid(p.width, p.height);
  detail::grow_polyomino(grid, p.cells, p.sparsity, rng);
  detail::make_simple(grid, rng);

  constexpr int kRetries = 64;
  for (int k = 0; k < p.holes; ++k) {
    bool ok = false;
    for (int attempt = 0; attempt < kRetries && !ok; ++attempt) {
      ok = detail::punch_hole(grid, p.max_hole_cells, rng);
    }
    if (!ok) throw infeasible_params("could not place hole " + std::to_string(k + 1));
  }

  return detail::domain_from_cells(grid, p.scale, rng);
}

}  // namespace rlink
