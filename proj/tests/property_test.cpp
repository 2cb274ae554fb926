#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "reference.hpp"
#include "rlink/oracle.hpp"
#include "rlink/verify.hpp"

namespace rlink {
namespace {

constexpr std::uint64_t kInstances = 60;

/// Random point of the closed rectangle, biased towards its boundary.
Point sample_in(const Rect& r, std::mt19937_64& rng) {
  auto pick = [&](Coord lo, Coord hi) {
    switch (rng() % 4) {
      case 0: return lo;
      case 1: return hi;
      default: return lo + static_cast<Coord>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
  };
  return {pick(r.xmin, r.xmax), pick(r.ymin, r.ymax)};
}

class Corpus : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Corpus, GraphStructure) {
  const auto inst = testing::corpus_instance(GetParam());
  const auto& g = inst.graph;
  EXPECT_EQ(inst.horizontal.size(), inst.vertical.size());
  EXPECT_EQ(g.edges(), build_graph_quadratic(inst.horizontal, inst.vertical).edges());

  for (RectId a = 0; a < g.size(); ++a) {
    for (RectId b = 0; b < g.size(); ++b) {
      if (g.orientation(a) == g.orientation(b)) {
        EXPECT_FALSE(g.adjacent(a, b));
        continue;
      }
      const bool cross = crosses(middle_segment(g.rect(a)), middle_segment(g.rect(b)));
      ASSERT_EQ(cross, overlaps(g.rect(a), g.rect(b)));
      ASSERT_EQ(cross, g.adjacent(a, b));
      if (cross) {
        const auto f = g.face(a, b);
        const auto c = f.center();
        EXPECT_TRUE(g.rect(a).contains(c) && g.rect(b).contains(c));
      }
    }
  }
}

TEST_P(Corpus, Parity) {
  const auto inst = testing::corpus_instance(GetParam());
  const auto& g = inst.graph;
  for (RectId i = 0; i < g.size(); ++i)
    for (RectId j = 0; j < g.size(); ++j) {
      const bool same = g.orientation(i) == g.orientation(j);
      ASSERT_EQ(inst.dm(i, j) % 2 == 1, same);
    }
}

TEST_P(Corpus, ConditionsMatchBruteForce) {
  const auto inst = testing::corpus_instance(GetParam());
  if (inst.graph.size() > 40) GTEST_SKIP() << "quadruple enumeration too large";
  const auto& s = inst.summary;
  if (s.ordiam >= kTheoremThreshold) {
    const bool cond = testing::diameter_condition_brute(inst.graph, inst.dm, s.ordiam);
    for (Engine e : {Engine::edge_scan, Engine::matmul, Engine::fast}) {
      EXPECT_EQ(compute_diameter(inst.graph, inst.dm, s, e).value, s.ordiam - (cond ? 1 : 2));
    }
    const Dist D = s.ordiam;
    const auto I = crossing_matrix(inst.graph);
    const auto Dm = distance_mask(inst.dm, [D](Dist v) { return v == D; });
    const auto DM = bool_product(Dm, bool_product(I, Dm));
    for (RectId i = 0; i < inst.graph.size(); ++i)
      for (RectId ip = 0; ip < inst.graph.size(); ++ip)
        ASSERT_EQ(DM.get(i, ip), testing::dm_entry_brute(inst.graph, inst.dm, D, i, ip));
  }
  if (s.orrad >= kTheoremThreshold) {
    const bool cond = testing::radius_condition_brute(inst.graph, inst.dm, s.orrad);
    for (Engine e : {Engine::edge_scan, Engine::matmul}) {
      EXPECT_EQ(compute_radius(inst.graph, inst.dm, s, e).value, s.orrad - (cond ? 1 : 2));
    }
  }
}

TEST_P(Corpus, PointDistanceMatchesOracle) {
  const auto inst = testing::corpus_instance(GetParam());
  const auto& g = inst.graph;
  std::mt19937_64 rng(GetParam());
  for (int k = 0; k < 40; ++k) {
    const auto& ra = g.rect(static_cast<RectId>(rng() % g.size()));
    const auto& rb = g.rect(static_cast<RectId>(rng() % g.size()));
    const Point p = sample_in(ra, rng);
    const Point q = sample_in(rb, rng);
    ASSERT_EQ(point_distance(g, inst.dm, p, q), oracle_distance(inst.domain, p, q))
        << p.x << "," << p.y << " -> " << q.x << "," << q.y;
  }
}

TEST_P(Corpus, SpanBoundsOnFaces) {
  const auto inst = testing::corpus_instance(GetParam());
  const auto& g = inst.graph;
  const auto  edges = g.edges();
  std::mt19937_64 rng(GetParam() + 1);
  for (int k = 0; k < 60; ++k) {
    const auto a = edges[rng() % edges.size()];
    const auto b = edges[rng() % edges.size()];
    if (a.first == b.first || a.second == b.second) continue;
    const int span = oriented_span(inst.dm, a, b);
    const int d = point_distance(g, inst.dm, g.face(a.first, a.second).center(),
                                 g.face(b.first, b.second).center());
    ASSERT_GE(d, span - 2);
    ASSERT_LE(d, span - 1);
    ASSERT_EQ(d, face_distance(inst.dm, a, b));
  }
}

TEST_P(Corpus, EnginesAgreeWithOracle) {
  const auto inst = testing::corpus_instance(GetParam());
  const auto rep = run_verify(inst);
  EXPECT_TRUE(rep.agree);
  EXPECT_TRUE(rep.witnesses_ok);
  EXPECT_STREQ(rep.verdict(), "ok");
}

INSTANTIATE_TEST_SUITE_P(Generated, Corpus, ::testing::Range<std::uint64_t>(0, kInstances));

}  // namespace
}  // namespace rlink
