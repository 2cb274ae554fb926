#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "rlink/decomposition.hpp"
#include "rlink/domain.hpp"
#include "rlink/svg.hpp"

namespace rlink {
namespace {

using testing::has_box;
using testing::P;

int count_substr(const std::string& s, const std::string& needle) {
  int    c = 0;
  size_t pos = 0;
  while ((pos = s.find(needle, pos)) != std::string::npos) {
    ++c;
    pos += needle.size();
  }
  return c;
}

TEST(ParseDomain, Fixtures) {
  const auto sq = parse_domain(testing::kSquare);
  EXPECT_EQ(sq.vertex_count(), 4u);
  EXPECT_EQ(sq.hole_count(), 0u);

  const auto donut = parse_domain(testing::kDonut);
  EXPECT_EQ(donut.vertex_count(), 8u);
  EXPECT_EQ(donut.hole_count(), 1u);
}

TEST(ParseDomain, DoublesAndOrients) {
  // clockwise input outer ring, counterclockwise hole
  const auto d = parse_domain(
      R"({"outer": [[0,0],[0,14],[14,14],[14,0]], "holes": [[[6,6],[8,6],[8,8],[6,8]]]})");
  EXPECT_GT(detail::twice_signed_area(d.outer()), 0);
  EXPECT_LT(detail::twice_signed_area(d.holes()[0]), 0);
  const auto& vs = d.outer().vertices;
  EXPECT_NE(std::find(vs.begin(), vs.end(), P(14, 14)), vs.end());
  // 14*14 - 2*2 in input units, four times that after doubling
  EXPECT_EQ(d.area(), 4 * (196 - 4));
}

TEST(ParseDomain, Errors) {
  EXPECT_THROW(parse_domain(R"({"outer": [[0,0],[10,0],[10,10],[5,12],[0,10]]})"), input_error);
  try {
    parse_domain(R"({"outer": [[0,0],[10,3],[10,10],[0,10]]})");
    FAIL();
  } catch (const input_error& e) {
    EXPECT_STREQ(e.what(), "non-rectilinear edge");
  }
  EXPECT_THROW(parse_domain("{\"outer\": [[0,0],"), input_error);
  EXPECT_THROW(parse_domain(R"({"holes": []})"), input_error);
  EXPECT_THROW(parse_domain(R"({"outer": [[0,0],[1.5,0],[1,1],[0,1]]})"), input_error);
  try {
    parse_domain(R"({"outer": [[0,0],[1000000000,0],[1000000000,1],[0,1]]})");
    FAIL();
  } catch (const input_error& e) {
    EXPECT_STREQ(e.what(), "coordinate overflow");
  }
}

TEST(Validate, FixturesAreClean) {
  EXPECT_TRUE(validate(parse_domain(testing::kSquare)).ok());
  EXPECT_TRUE(validate(parse_domain(testing::kLShape)).ok());
  EXPECT_TRUE(validate(parse_domain(testing::kDonut)).ok());
}

TEST(Validate, GeneralPosition) {
  // hole's left edge on the outer ring's x=0
  const auto bad = parse_domain(
      R"({"outer": [[0,0],[14,0],[14,14],[0,14]], "holes": [[[0,6],[8,6],[8,8],[0,8]]]})");
  EXPECT_TRUE(validate(bad).has(Violation::general_position));

  const auto shares_x = parse_domain(
      R"({"outer": [[0,0],[14,0],[14,14],[0,14]], "holes": [[[14,6],[8,6],[8,8],[14,8]]]})");
  EXPECT_TRUE(validate(shares_x).has(Violation::general_position));

  // two reflex corners of one ring at the same height
  const auto u_shape = parse_domain(
      R"({"outer": [[0,0],[10,0],[10,10],[7,10],[7,4],[3,4],[3,10],[0,10]]})");
  EXPECT_TRUE(validate(u_shape).has(Violation::general_position));
}

TEST(Validate, Simplicity) {
  // the ring crosses itself at (3,2) and (1,2)
  const auto d = parse_domain(
      R"({"outer": [[0,2],[6,2],[6,6],[3,6],[3,0],[1,0],[1,4],[0,4]]})");
  EXPECT_TRUE(validate(d).has(Violation::simplicity));
}

TEST(Validate, Alternation) {
  const auto d = parse_domain(R"({"outer": [[0,0],[5,0],[10,0],[10,10],[0,10]]})");
  EXPECT_TRUE(validate(d).has(Violation::alternation));
}

TEST(Validate, HoleContainment) {
  const auto outside = parse_domain(
      R"({"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[20,21],[23,21],[23,23],[20,23]]]})");
  EXPECT_TRUE(validate(outside).has(Violation::containment));

  const auto crossing = parse_domain(
      R"({"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": [[[5,3],[13,3],[13,7],[5,7]]]})");
  EXPECT_TRUE(validate(crossing).has(Violation::disjointness));

  const auto nested = parse_domain(R"({"outer": [[0,0],[20,0],[20,20],[0,20]],
      "holes": [[[2,3],[17,3],[17,18],[2,18]], [[5,6],[9,6],[9,11],[5,11]]]})");
  EXPECT_TRUE(validate(nested).has(Violation::containment));
}

TEST(Decomposition, Square) {
  const auto d = parse_domain(testing::kSquare);
  const auto h = horizontal_decomposition(d);
  const auto v = vertical_decomposition(d);
  ASSERT_EQ(h.size(), 1u);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(has_box(h.rects[0], 0, 10, 0, 10));
  EXPECT_TRUE(has_box(v.rects[0], 0, 10, 0, 10));
}

TEST(Decomposition, LShape) {
  const auto d = parse_domain(testing::kLShape);
  const auto h = horizontal_decomposition(d);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_TRUE(has_box(h.rects[0], 0, 10, 0, 4));
  EXPECT_TRUE(has_box(h.rects[1], 0, 4, 4, 10));
  const auto v = vertical_decomposition(d);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_TRUE(has_box(v.rects[0], 0, 4, 0, 10));
  EXPECT_TRUE(has_box(v.rects[1], 4, 10, 0, 4));
  __int128 area = 0;
  for (const auto& r : h.rects) area += r.area();
  EXPECT_TRUE(area == d.area());
}

TEST(Decomposition, Donut) {
  const auto d = parse_domain(testing::kDonut);
  const auto h = horizontal_decomposition(d);
  ASSERT_EQ(h.size(), 4u);
  // ids ordered by (ymin, xmin)
  EXPECT_TRUE(has_box(h.rects[0], 0, 14, 0, 6));
  EXPECT_TRUE(has_box(h.rects[1], 0, 6, 6, 8));
  EXPECT_TRUE(has_box(h.rects[2], 8, 14, 6, 8));
  EXPECT_TRUE(has_box(h.rects[3], 0, 14, 8, 14));
  const auto v = vertical_decomposition(d);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_TRUE(has_box(v.rects[0], 0, 6, 0, 14));
  EXPECT_TRUE(has_box(v.rects[1], 6, 8, 0, 6));
  EXPECT_TRUE(has_box(v.rects[2], 6, 8, 8, 14));
  EXPECT_TRUE(has_box(v.rects[3], 8, 14, 0, 14));
  for (const auto* dec : {&h, &v}) {
    __int128 area = 0;
    for (const auto& r : dec->rects) area += r.area();
    EXPECT_TRUE(area == d.area());
  }
}

TEST(Locate, Donut) {
  const auto d = parse_domain(testing::kDonut);
  const auto h = horizontal_decomposition(d);
  const auto ids = locate(h, P(7, 3));
  ASSERT_EQ(ids.size(), 1u);
  EXPECT_TRUE(has_box(h.rects[ids[0]], 0, 14, 0, 6));

  // on the slab line y=6 below the hole: only the bottom slab reaches it
  const auto on_line = locate(h, P(7, 6));
  ASSERT_EQ(on_line.size(), 1u);
  EXPECT_TRUE(has_box(h.rects[on_line[0]], 0, 14, 0, 6));

  // on the slab line y=6 left of the hole: bottom slab and left middle slab
  const auto shared = locate(h, P(3, 6));
  ASSERT_EQ(shared.size(), 2u);
  EXPECT_TRUE(has_box(h.rects[shared[0]], 0, 14, 0, 6));
  EXPECT_TRUE(has_box(h.rects[shared[1]], 0, 6, 6, 8));

  EXPECT_THROW(locate(h, P(7, 7)), input_error);
  EXPECT_THROW(locate(h, P(20, 1)), input_error);
}

TEST(Locate, Square) {
  const auto d = parse_domain(testing::kSquare);
  for (const auto& dec : {horizontal_decomposition(d), vertical_decomposition(d)}) {
    const auto ids = locate(dec, P(5, 5));
    ASSERT_EQ(ids.size(), 1u);
    EXPECT_EQ(ids[0], 0u);
  }
}

TEST(RenderSvg, Layers) {
  const auto sq = parse_domain(testing::kSquare);
  const auto plain = render_svg(sq);
  EXPECT_EQ(count_substr(plain, "<polygon"), 1);
  EXPECT_EQ(count_substr(plain, "<rect"), 0);
  EXPECT_NE(plain.find("</svg>"), std::string::npos);

  const auto donut = parse_domain(testing::kDonut);
  SvgLayers  with_h;
  with_h.decompositions.push_back(horizontal_decomposition(donut));
  EXPECT_EQ(count_substr(render_svg(donut, with_h), "<rect"), 4);

  SvgLayers witness;
  witness.points = {P(3, 7), P(11, 7)};
  EXPECT_EQ(count_substr(render_svg(donut, witness), "<circle"), 2);
}

}  // namespace
}  // namespace rlink
