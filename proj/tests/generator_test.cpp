#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "rlink/generator.hpp"

namespace rlink {
namespace {

TEST(Generator, Deterministic) {
  GenParams p;
  p.seed = 42;
  EXPECT_EQ(to_json(gen_domain(p)), to_json(gen_domain(p)));
  GenParams q = p;
  q.seed = 43;
  EXPECT_NE(to_json(gen_domain(p)), to_json(gen_domain(q)));
}

TEST(Generator, ValidAndInGeneralPosition) {
  for (std::uint64_t k = 0; k < 150; ++k) {
    const auto p = testing::corpus_params(k);
    Domain     d;
    try {
      d = gen_domain(p);
    } catch (const infeasible_params&) {
      continue;
    }
    const auto rep = validate(d);
    ASSERT_TRUE(rep.ok()) << "seed " << p.seed;
    EXPECT_LE(d.hole_count(), static_cast<std::size_t>(p.holes));
    std::set<Coord> xs;
    std::set<Coord> ys;
    for (const auto& e : d.edges()) {
      auto& s = e.axis == Axis::vertical ? xs : ys;
      EXPECT_TRUE(s.insert(e.fixed).second);
    }
  }
}

TEST(Generator, HoleCount) {
  GenParams p;
  p.width = 10;
  p.height = 10;
  p.cells = 100;
  p.holes = 3;
  p.seed = 9;
  EXPECT_EQ(gen_domain(p).hole_count(), 3u);
  p.holes = 0;
  const auto full = gen_domain(p);
  EXPECT_EQ(full.hole_count(), 0u);
  EXPECT_EQ(full.vertex_count(), 4u);
}

TEST(Generator, Infeasible) {
  GenParams p;
  p.width = 3;
  p.height = 3;
  p.cells = 10;
  EXPECT_THROW(gen_domain(p), infeasible_params);
  p.cells = 9;
  p.holes = 2;
  EXPECT_THROW(gen_domain(p), infeasible_params);
  p.holes = 0;
  p.scale = 4;
  EXPECT_THROW(gen_domain(p), infeasible_params);
}

TEST(Generator, ExplicitScale) {
  GenParams p;
  p.width = 4;
  p.height = 4;
  p.cells = 16;
  p.holes = 0;
  p.scale = 100;
  const auto d = gen_domain(p);
  for (const auto& e : d.edges()) {
    const Coord input = e.fixed / 2;
    EXPECT_EQ(input % 100, 1);
  }
}

TEST(Generator, FullThreeByThreeWithHoleIsADonut) {
  GenParams p;
  p.width = 3;
  p.height = 3;
  p.cells = 9;
  p.holes = 1;
  p.scale = 1000;
  for (std::uint64_t seed : {1, 2, 3}) {
    p.seed = seed;
    const auto d = gen_domain(p);
    EXPECT_TRUE(validate(d).ok());
    EXPECT_EQ(d.hole_count(), 1u);
    EXPECT_EQ(d.vertex_count(), 8u);
    const auto inst = analyze(d);
    EXPECT_EQ(inst.summary.ordiam, 5);
    EXPECT_EQ(inst.summary.orrad, 4);
  }
}

TEST(Generator, SingleCellIsARectangle) {
  GenParams p;
  p.width = 1;
  p.height = 1;
  p.cells = 1;
  p.holes = 0;
  const auto d = gen_domain(p);
  EXPECT_EQ(d.vertex_count(), 4u);
  EXPECT_EQ(d.hole_count(), 0u);
}

TEST(Generator, Sparsity) {
  GenParams p;
  p.width = 12;
  p.height = 12;
  p.cells = 80;
  p.holes = 0;
  std::size_t dense = 0;
  std::size_t thin = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    p.seed = seed;
    p.sparsity = 0;
    dense += gen_domain(p).vertex_count();
    p.sparsity = 95;
    const auto d = gen_domain(p);
    EXPECT_TRUE(validate(d).ok());
    thin += d.vertex_count();
  }
  EXPECT_GT(thin, dense);
}

TEST(FromCells, Patterns) {
  const auto two = testing::from_pattern(testing::kTwoDonuts);
  EXPECT_TRUE(validate(two).ok());
  EXPECT_EQ(two.hole_count(), 2u);
  EXPECT_EQ(two.vertex_count(), 12u + 8u);

  const auto snake = testing::from_pattern(testing::kSerpentine);
  EXPECT_TRUE(validate(snake).ok());
  EXPECT_EQ(snake.vertex_count(), 12u);

  const auto cross = testing::from_pattern(testing::kCross);
  EXPECT_TRUE(validate(cross).ok());
  EXPECT_EQ(cross.vertex_count(), 12u);
}

}  // namespace
}  // namespace rlink
