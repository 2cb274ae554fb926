#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlink/generator.hpp"
#include "rlink/graph.hpp"
#include "rlink/instance.hpp"
#include "rlink/samples.hpp"

namespace rlink::testing {

inline constexpr const char* kSquare = samples::kSquare;
inline constexpr const char* kLShape = samples::kLShape;
inline constexpr const char* kDonut = samples::kDonut;

inline Instance square() { return analyze(parse_domain(kSquare)); }
inline Instance lshape() { return analyze(parse_domain(kLShape)); }
inline Instance donut() { return analyze(parse_domain(kDonut)); }

/// Input coordinates to internal (doubled) ones.
inline Point P(Coord x, Coord y) { return {2 * x, 2 * y}; }

inline bool has_box(const Rect& r, Coord x0, Coord x1, Coord y0, Coord y1) {
  return r.xmin == 2 * x0 && r.xmax == 2 * x1 && r.ymin == 2 * y0 && r.ymax == 2 * y1;
}

/// Graph id of the rectangle with the given orientation and box (input units).
inline RectId id_of(const OrientedGraph& g, Axis a, Coord x0, Coord x1, Coord y0, Coord y1) {
  for (const auto& r : g.rects()) {
    if (r.orientation == a && has_box(r, x0, x1, y0, y1)) return r.id;
  }
  throw std::logic_error("no such rectangle");
}

// Named DONUT rectangles, input units.
struct DonutIds {
  RectId h1, h2, h3, h4, v1, v2, v3, v4;
};

inline DonutIds donut_ids(const OrientedGraph& g) {
  const auto H = Axis::horizontal;
  const auto V = Axis::vertical;
  return {id_of(g, H, 0, 14, 0, 6),  id_of(g, H, 0, 14, 8, 14), id_of(g, H, 0, 6, 6, 8),
          id_of(g, H, 8, 14, 6, 8),  id_of(g, V, 0, 6, 0, 14),  id_of(g, V, 8, 14, 0, 14),
          id_of(g, V, 6, 8, 0, 6),   id_of(g, V, 6, 8, 8, 14)};
}

/// Domain drawn as rows of '#' (filled) and '.' (empty), top row first.
inline Domain from_pattern(const std::vector<std::string>& rows, std::uint64_t seed = 1) {
  const int        h = static_cast<int>(rows.size());
  const int        w = static_cast<int>(rows.front().size());
  detail::CellGrid grid(w, h);
  for (int r = 0; r < h; ++r) {
    for (int x = 0; x < w; ++x) grid.set(x, h - 1 - r, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)] == '#');
  }
  std::mt19937_64 rng(seed);
  return detail::domain_from_cells(grid, 0, rng);
}

// Two donuts joined by a corridor, a serpentine corridor, a plus sign.
inline const std::vector<std::string> kTwoDonuts = {"###..........###",
                                                    "#.############.#",
                                                    "###..........###"};
inline const std::vector<std::string> kSerpentine = {"##########", ".........#", "##########",
                                                     "#.........", "##########"};
inline const std::vector<std::string> kCross = {".##.", "####", "####", ".##."};

/// Corpus size with grids up to 12x12; indices from there on give larger
/// grids (24..40) with thin shapes, for a few hundred vertices.
inline constexpr std::uint64_t kSmallCorpus = 240;

/// Parameters of the generated corpus used by property and acceptance tests.
/// At most three holes throughout.
inline GenParams corpus_params(std::uint64_t k) {
  static constexpr int kSparsity[] = {0, 60, 90, 95};
  GenParams p;
  p.holes = static_cast<int>(k % 4);
  p.seed = 1000 + k;
  if (k < kSmallCorpus) {
    p.width = 3 + static_cast<int>(k % 10);          // 3..12
    p.height = 3 + static_cast<int>((k / 10) % 10);  // 3..12
    const int area = p.width * p.height;
    p.cells = std::max(1, area * (45 + static_cast<int>((k * 7) % 50)) / 100);
    p.sparsity = kSparsity[(k / 4) % 4];
  } else {
    p.width = 24 + 4 * static_cast<int>(k % 5);
    p.height = p.width;
    p.cells = p.width * p.height * 2 / 5;
    p.sparsity = 95;
    p.holes = 3;
  }
  return p;
}

/// Generates a corpus instance, dropping holes that do not fit.
inline Instance corpus_instance(std::uint64_t k) {
  auto p = corpus_params(k);
  while (true) {
    try {
      return analyze(gen_domain(p));
    } catch (const infeasible_params&) {
      if (p.holes == 0) throw;
      --p.holes;
    }
  }
}

}  // namespace rlink::testing
