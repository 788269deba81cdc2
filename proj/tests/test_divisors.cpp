#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "toric/divisors.hpp"

using namespace toric;

namespace {

Fan two_cone_fan() { return make_fan({make_cone({{1, 0}, {1, 1}}), make_cone({{1, 1}, {4, 5}})}); }

SupportFunction heights(const Fan& f, std::map<LatticeVector, Integer> values) {
  SupportFunction psi;
  psi.fan = f;
  psi.ray_values = std::move(values);
  return with_linear_representatives(psi);
}

}  // namespace

TEST(CanonicalSupport, AllOnes) {
  auto psi = canonical_support(two_cone_fan());
  ASSERT_EQ(psi.ray_values.size(), 3u);
  for (const auto& [ray, value] : psi.ray_values) EXPECT_EQ(value, 1);
  EXPECT_TRUE(canonical_support(Fan(2)).ray_values.empty());
}

TEST(Cartier, BasicFanIsCartier) {
  auto psi = canonical_support(two_cone_fan());
  EXPECT_TRUE(is_cartier(psi));
  EXPECT_EQ(qcartier_index(psi), Integer(1));
}

TEST(Cartier, IndexTwoCone) {
  Cone c = make_cone({{0, 1}, {4, -1}});
  auto psi = with_linear_representatives(canonical_support(make_fan({c})));
  EXPECT_FALSE(is_cartier(psi));
  EXPECT_EQ(qcartier_index(psi), Integer(2));
  EXPECT_EQ((*psi.linear)[0], Covector(std::vector<Rational>{Rational(1, 2), Rational(1)}));
}

TEST(Cartier, GorensteinThreefold) {
  Cone c = oracle::cone_over({{-3, 3}, {3, 1}, {0, -3}});
  auto psi = with_linear_representatives(canonical_support(make_fan({c})));
  EXPECT_TRUE(is_cartier(psi));
  EXPECT_EQ((*psi.linear)[0], Covector(LatticeVector{0, 0, 1}));
}

TEST(Cartier, NotQCartierOnNonPlanarCone) {
  Cone c = make_cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 2}});
  EXPECT_FALSE(qcartier_index(canonical_support(make_fan({c}))));
  EXPECT_THROW(with_linear_representatives(canonical_support(make_fan({c}))), DomainError);
}

TEST(StrictConvexity, TwoCones) {
  // the common ray must sit above the plane through its neighbours
  EXPECT_TRUE(is_strictly_upper_convex(heights(two_cone_fan(), {{{1, 0}, 0}, {{1, 1}, 1}, {{4, 5}, 0}})));
  EXPECT_FALSE(is_strictly_upper_convex(heights(two_cone_fan(), {{{1, 0}, 0}, {{1, 1}, -1}, {{4, 5}, 0}})));
}

TEST(StrictConvexity, SingleConeIsTrivial) {
  auto psi = with_linear_representatives(canonical_support(make_fan({make_cone({{1, 0}, {4, 5}})})));
  EXPECT_TRUE(is_strictly_upper_convex(psi));
}

TEST(StrictConvexity, CoplanarCellsFail) {
  Fan f = make_fan({oracle::cone_over({{0, 0}, {1, 0}, {1, 1}}), oracle::cone_over({{0, 0}, {1, 1}, {0, 1}})});
  std::map<LatticeVector, Integer> flat;
  for (const auto& r : f.rays()) flat[r] = 0;
  EXPECT_FALSE(is_strictly_upper_convex(heights(f, flat)));
  flat[LatticeVector{0, 0, 1}] = 1;
  flat[LatticeVector{1, 1, 1}] = 1;
  EXPECT_TRUE(is_strictly_upper_convex(heights(f, flat)));
}

TEST(StrictConvexity, NeedsRepresentatives) {
  EXPECT_THROW(is_strictly_upper_convex(canonical_support(two_cone_fan())), DomainError);
}

TEST(Discrepancies, CrepantBlowUp) {
  Cone base = make_cone({{0, 1}, {2, 1}});
  auto rep = discrepancies(base, star_subdivision(make_fan({base}), LatticeVector{1, 1}));
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(rep.entries[0].discrepancy, 0);
  EXPECT_TRUE(rep.is_crepant());
  EXPECT_EQ(rep.m_sigma, Covector(LatticeVector{0, 1}));
}

TEST(Discrepancies, PositiveOnIndexTwoCone) {
  Cone base = make_cone({{0, 1}, {4, -1}});
  auto rep = discrepancies(base, star_subdivision(make_fan({base}), LatticeVector{1, 1}));
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(rep.entries[0].discrepancy, Rational(1, 2));
  EXPECT_FALSE(rep.is_crepant());
  EXPECT_TRUE(rep.is_log_terminal());
}

TEST(Discrepancies, NegativeOnNonCanonicalCone) {
  Cone base = make_cone({{1, 0}, {4, 5}});
  auto rep = discrepancies(base, star_subdivision(make_fan({base}), LatticeVector{1, 1}));
  ASSERT_EQ(rep.entries.size(), 1u);
  // m = (1, -3/5): <m,(1,1)> - 1 = -3/5
  EXPECT_EQ(rep.entries[0].discrepancy, Rational(-3, 5));
  EXPECT_TRUE(rep.is_log_terminal());
}

TEST(Discrepancies, NoNewRays) {
  Cone base = make_cone({{1, 0}, {4, 5}});
  EXPECT_TRUE(discrepancies(base, make_fan({base})).entries.empty());
}

TEST(Discrepancies, Errors) {
  Cone bad = make_cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 2}});
  EXPECT_THROW(discrepancies(bad, make_fan({bad})), DomainError);
  Cone base = make_cone({{1, 0}, {4, 5}});
  EXPECT_THROW(discrepancies(base, make_fan({make_cone({{1, 0}, {1, 1}})})), DomainError);
}
