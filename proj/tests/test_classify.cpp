#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "toric/classify.hpp"
#include "toric/hilbert.hpp"

using namespace toric;
using oracle::Point;

namespace {

const std::vector<Point> kBigTriangle{{-3, 3}, {3, 1}, {0, -3}};
const std::vector<Point> kBasic{{0, 0}, {1, 0}, {0, 1}};
const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const std::vector<Point> kTwiceBasic{{0, 0}, {2, 0}, {0, 2}};

}  // namespace

TEST(GorensteinData, Examples) {
  auto g = gorenstein_data(oracle::cone_over(kBigTriangle));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->m, Covector(LatticeVector{0, 0, 1}));
  EXPECT_EQ(g->index, 1);

  auto h = gorenstein_data(make_cone({{0, 1}, {4, -1}}));
  ASSERT_TRUE(h);
  EXPECT_EQ(h->m, Covector(std::vector<Rational>{Rational(1, 2), Rational(1)}));
  EXPECT_EQ(h->index, 2);

  EXPECT_EQ(gorenstein_data(oracle::cone_over(kSquare))->index, 1);
  EXPECT_EQ(gorenstein_data(make_cone({{1, 0}, {4, 5}}))->index, 5);
  EXPECT_FALSE(gorenstein_data(make_cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 2}})));
}

TEST(GorensteinData, LowerDimensionalCone) {
  Cone c = make_cone({{1, 0, 0}, {1, 2, 0}});
  auto g = gorenstein_data(c);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->index, 1);
  for (const auto& r : c.rays()) EXPECT_EQ(g->m.pair(r), 1);
}

TEST(Classify, GorensteinThreefold) {
  auto r = classify(oracle::cone_over(kBigTriangle));
  EXPECT_FALSE(r.smooth);
  EXPECT_TRUE(r.q_factorial);
  EXPECT_TRUE(r.gorenstein);
  EXPECT_TRUE(r.canonical);
  EXPECT_FALSE(r.terminal);
  EXPECT_TRUE(r.log_terminal);
  EXPECT_EQ(r.lci, false);
  EXPECT_EQ(r.embedding_dim, std::size_t(14));
}

TEST(Classify, CyclicSurfaceQuotient) {
  auto r = classify(make_cone({{1, 0}, {4, 5}}));
  EXPECT_FALSE(r.smooth);
  EXPECT_TRUE(r.q_factorial);
  EXPECT_FALSE(r.gorenstein);
  ASSERT_TRUE(r.q_gorenstein);
  EXPECT_EQ(r.q_gorenstein->index, 5);
  EXPECT_FALSE(r.canonical);
  EXPECT_TRUE(r.log_terminal);
  EXPECT_FALSE(r.lci);
  EXPECT_EQ(r.embedding_dim, std::size_t(6));
}

TEST(Classify, SmoothCone) {
  auto r = classify(make_cone({{1, 2, 3}, {1, 3, 3}, {2, 5, 7}}));
  EXPECT_TRUE(r.smooth);
  EXPECT_TRUE(r.terminal);
  EXPECT_EQ(r.lci, true);
}

TEST(Classify, TerminalQuotientOfIndexFive) {
  auto r = classify(make_cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 5}}));
  EXPECT_FALSE(r.gorenstein);
  EXPECT_EQ(r.q_gorenstein->index, 5);
  EXPECT_TRUE(r.terminal);
}

TEST(Classify, NonCanonicalQuotient) {
  auto r = classify(make_cone({{1, 0, 0}, {0, 1, 0}, {-1, -1, 4}}));
  EXPECT_EQ(r.q_gorenstein->index, 4);
  EXPECT_FALSE(r.canonical);
  EXPECT_TRUE(r.log_terminal);
}

TEST(Classify, NonQGorenstein) {
  auto r = classify(make_cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 2}}));
  EXPECT_FALSE(r.q_gorenstein);
  EXPECT_FALSE(r.q_factorial);
  EXPECT_FALSE(r.log_terminal);
}

TEST(Elementary, Examples) {
  EXPECT_TRUE(is_elementary(oracle::polygon(kBasic)));
  EXPECT_TRUE(is_elementary(oracle::polygon(kSquare)));
  EXPECT_FALSE(is_elementary(oracle::polygon(kTwiceBasic)));
}

TEST(Nakajima, Examples) {
  EXPECT_TRUE(is_nakajima(oracle::polygon(kBasic)));
  EXPECT_TRUE(is_nakajima(oracle::polygon(kSquare)));
  // stacked over [0,2] with height 2 - x
  EXPECT_TRUE(is_nakajima(oracle::polygon(kTwiceBasic)));
  EXPECT_FALSE(is_nakajima(oracle::polygon(kBigTriangle)));
  EXPECT_FALSE(is_nakajima(oracle::polygon({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}})));
}

TEST(Nakajima, SegmentsAndPoints) {
  EXPECT_TRUE(is_nakajima(LatticePolytope::hull({LatticeVector{0, 0}})));
  EXPECT_TRUE(is_nakajima(LatticePolytope::hull({LatticeVector{0, 0}, LatticeVector{3, 3}})));
  EXPECT_THROW(is_nakajima(LatticePolytope::hull(
                   {LatticeVector{0, 0, 0}, LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}})),
               DomainError);
}

TEST(Nakajima, AgreesWithConstructionSearch) {
  std::vector<Point> grid;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) grid.push_back({x, y});
  std::set<std::vector<Point>> seen;
  for (std::size_t mask = 0; mask < (1u << grid.size()); ++mask) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask >> i & 1) pts.push_back(grid[i]);
    if (pts.size() < 3) continue;
    auto hull = oracle::convex_hull(pts);
    if (hull.size() < 3 || !seen.insert(hull).second) continue;
    EXPECT_EQ(is_nakajima(oracle::polygon(hull)), oracle::is_nakajima(hull)) << oracle::polygon(hull).to_string();
  }
  EXPECT_GT(seen.size(), 30u);
}

TEST(Nakajima, LciFlagOnCones) {
  EXPECT_EQ(classify(oracle::cone_over(kSquare)).lci, true);
  EXPECT_EQ(classify(oracle::cone_over(kTwiceBasic)).lci, true);
  EXPECT_EQ(classify(oracle::cone_over({{0, 0}, {3, 0}, {0, 3}})).lci, true);
  EXPECT_EQ(classify(oracle::cone_over(kBigTriangle)).lci, false);
}

TEST(LriGeneralSection, Examples) {
  EXPECT_EQ(lri_general_section(oracle::cone_over(kBigTriangle)), 13u);
  Cone hexagon = oracle::cone_over({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
  EXPECT_EQ(embedding_dimension(hexagon), 7u);
  EXPECT_EQ(lri_general_section(hexagon), 6u);
}

TEST(LriGeneralSection, Preconditions) {
  EXPECT_THROW(lri_general_section(oracle::cone_over(kBasic)), DomainError);
  EXPECT_THROW(lri_general_section(oracle::cone_over(kTwiceBasic)), DomainError);
  EXPECT_THROW(lri_general_section(make_cone({{1, 0}, {4, 5}})), DomainError);
  EXPECT_THROW(lri_general_section(make_cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 5}})), DomainError);
}

TEST(IndexOneCover, IndexTwo) {
  Cone c = make_cone({{0, 1}, {4, -1}});
  auto cover = index_one_cover(c);
  EXPECT_EQ(cover.index, 2);
  EXPECT_EQ(abs(determinant(cover.basis)), 2);
  auto g = gorenstein_data(cover.cone);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->index, 1);
  EXPECT_TRUE(cover.m.is_integral());
  for (const auto& r : cover.cone.rays()) {
    auto x = cover.to_ambient(r);
    EXPECT_TRUE(c.contains(x));
    EXPECT_TRUE(c.has_ray(primitive(x)));
  }
}

TEST(IndexOneCover, IndexFive) {
  auto cover = index_one_cover(make_cone({{1, 0}, {4, 5}}));
  EXPECT_EQ(cover.index, 5);
  EXPECT_EQ(gorenstein_data(cover.cone)->index, 1);
}

TEST(IndexOneCover, RejectsIndexOne) {
  EXPECT_THROW(index_one_cover(oracle::cone_over(kBigTriangle)), DomainError);
}
