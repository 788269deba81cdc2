#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "toric/hilbert.hpp"

using namespace toric;

namespace {

std::vector<LatticeVector> vs(std::initializer_list<LatticeVector> xs) { return xs; }

Cone big_triangle_cone() { return oracle::cone_over({{-3, 3}, {3, 1}, {0, -3}}); }

}  // namespace

TEST(HilbertBasis, Orthants) {
  EXPECT_EQ(hilbert_basis(make_cone({{1, 0}, {0, 1}})).members, vs({{0, 1}, {1, 0}}));
  EXPECT_EQ(hilbert_basis(make_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).members,
            vs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(HilbertBasis, TwoDimensionalExamples) {
  EXPECT_EQ(hilbert_basis(make_cone({{1, 0}, {4, 5}})).members, vs({{1, 0}, {1, 1}, {4, 5}}));
  EXPECT_EQ(hilbert_basis(make_cone({{0, 1}, {5, -4}})).members,
            vs({{0, 1}, {1, 0}, {2, -1}, {3, -2}, {4, -3}, {5, -4}}));
}

TEST(HilbertBasis, MatchesBoxEnumeration) {
  for (auto gens : std::vector<std::vector<oracle::Point>>{{{1, 0}, {4, 5}},
                                                          {{2, 7}, {5, -3}},
                                                          {{1, 0, 0}, {0, 1, 0}, {1, 1, 5}},
                                                          {{-3, 3, 1}, {3, 1, 1}, {0, -3, 1}},
                                                          {{1, 2, 3}, {3, -1, 2}, {-2, 1, 4}, {0, 0, 1}}}) {
    Cone c = make_cone(oracle::to_vectors(gens));
    EXPECT_EQ(oracle::from_vectors(hilbert_basis(c).members), oracle::hilbert_basis(gens)) << c.to_string();
  }
}

TEST(HilbertBasis, DualCone) {
  auto h = hilbert_basis(dual_cone(big_triangle_cone()));
  EXPECT_EQ(h.members.size(), 14u);
  auto plain = hilbert_basis(dual_cone(big_triangle_cone()).pointed());
  EXPECT_EQ(h.members, plain.members);
}

TEST(HilbertBasis, RejectsNonPointed) { EXPECT_THROW(hilbert_basis(dual_cone(make_cone({{1, 0}}))), DomainError); }

TEST(HilbertBasis, LowerDimensionalCone) {
  auto h = hilbert_basis(make_cone({{1, 0, 0}, {1, 2, 0}}));
  EXPECT_EQ(h.members, vs({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}}));
}

TEST(ParallelepipedPoints, CountIsMultiplicityMinusOne) {
  Cone c = make_cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 5}});
  auto pts = parallelepiped_points(c);
  // the origin is left out
  EXPECT_EQ(pts, (std::vector<LatticeVector>{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}}));
}

TEST(EmbeddingDimension, Examples) {
  EXPECT_EQ(embedding_dimension(make_cone({{1, 0}, {4, 5}})), 6u);
  EXPECT_EQ(embedding_dimension(big_triangle_cone()), 14u);
  EXPECT_EQ(embedding_dimension(make_cone({{1, 0}, {0, 1}})), 2u);
  EXPECT_EQ(embedding_dimension(make_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(embedding_dimension(make_cone({{1, 2, 3}, {1, 3, 3}, {2, 5, 7}})), 3u);
  EXPECT_THROW(embedding_dimension(make_cone({{1, 0, 0}})), DomainError);
}

TEST(ToricRelations, SmoothConeHasNone) {
  EXPECT_TRUE(toric_relations(make_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3).empty());
}

TEST(ToricRelations, SquareConeIsOneQuadric) {
  Cone c = oracle::cone_over({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto rel = toric_relations(c, 3);
  ASSERT_EQ(rel.size(), 1u);
  EXPECT_EQ(rel[0].degree(), 2u);
  auto dual = hilbert_basis(dual_cone(c)).members;
  LatticeVector l(3), r(3);
  for (std::size_t i = 0; i < dual.size(); ++i) {
    l += Integer(rel[0].lhs[i]) * dual[i];
    r += Integer(rel[0].rhs[i]) * dual[i];
  }
  EXPECT_EQ(l, r);
}

TEST(ToricRelations, CyclicQuotientQuadrics) {
  // edim 6 gives C(5,2) = 10 quadrics for the rational normal cone
  auto rel = toric_relations(make_cone({{1, 0}, {4, 5}}), 2);
  EXPECT_EQ(rel.size(), 10u);
  for (const auto& b : rel) {
    EXPECT_EQ(b.degree(), 2u);
    EXPECT_NE(b.lhs, b.rhs);
  }
}
