#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tropjac/error.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/poly.hpp"

using namespace tropjac;
using fx::pt;

TEST(Divisor, Arithmetic) {
  auto d = Divisor::point(pt(0, 0), 2) + Divisor::point(pt(1, 1));
  EXPECT_EQ(d.degree(), 3);
  d -= Divisor::point(pt(0, 0), 2);
  EXPECT_EQ(d, Divisor::point(pt(1, 1)));
  EXPECT_TRUE((d - d).empty());
  EXPECT_EQ((-d).degree(), -1);
  EXPECT_EQ(to_string(Divisor::point(pt(1, 0)) - Divisor::point(pt(0, 1))), "-(0,1) + (1,0)");
}

TEST(Divisor, HostTagsMustMatch) {
  const auto a = Divisor::point(pt(0, 0)).with_host(host_tag(fx::load("triangle.json")));
  const auto b = Divisor::point(pt(1, 0)).with_host(host_tag(fx::load("cubic.json")));
  EXPECT_THROW((void)(a + b), PreconditionError);
  EXPECT_NO_THROW((void)(a + Divisor::point(pt(1, 0))));
  // Relabeling the host leaves its tag unchanged.
  auto shuffled = fx::load("triangle.json");
  std::reverse(shuffled.rays.begin(), shuffled.rays.end());
  EXPECT_EQ(host_tag(shuffled), host_tag(fx::load("triangle.json")));
}

TEST(Intersection, TransversalMultiplicity) {
  EXPECT_EQ(transversal_multiplicity(IntVector{1, 0}, IntVector{0, 1}), 1);
  EXPECT_EQ(transversal_multiplicity(IntVector{2, 0}, IntVector{1, 3}), 6);
  EXPECT_EQ(transversal_multiplicity(IntVector{1, 1}, IntVector{-1, 1}), 2);
}

TEST(Intersection, TwoLinesMeetOnce) {
  const auto d = stable_intersection(fx::line(pt(0, 0)), fx::line(pt(2, 1)));
  EXPECT_EQ(d.degree(), 1);
  EXPECT_TRUE(is_transversal(fx::line(pt(0, 0)), fx::line(pt(2, 1))));
  // Hand computation: the (1,1) ray of the first meets the (-1,0) ray of
  // the second at (1,1).
  EXPECT_EQ(d, Divisor::point(pt(1, 1)));
}

TEST(Intersection, LineWithItself) {
  const auto l = fx::line(pt(0, 0));
  EXPECT_TRUE(shares_segment(l, l));
  EXPECT_EQ(stable_intersection(l, l), Divisor::point(pt(0, 0)));
  EXPECT_EQ(perturbation_oracle(l, l, {Rational(1), Rational(2)}), Divisor::point(pt(0, 0)));
  // (1,0) is parallel to a ray, so the oracle cannot use it.
  EXPECT_THROW(perturbation_oracle(l, l, {Rational(1), Rational(0)}), PreconditionError);
}

TEST(Intersection, GenericDirectionAvoidsEveryPiece) {
  const auto a = fx::load("cubic.json");
  const auto b = fx::line(pt(0, 0));
  const auto d = generic_direction(a, b);
  EXPECT_EQ(d.x, 1);
  for (const auto& p : pieces(a)) EXPECT_NE(cross(d, p.direction.vec()), 0);
  for (const auto& p : pieces(b)) EXPECT_NE(cross(d, p.direction.vec()), 0);
}

TEST(Intersection, BezoutDegreeMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    std::vector<IntVector> a;
    std::vector<IntVector> b;
    for (int i = 0; i < 4; ++i) a.push_back({fx::uniform(rng, -3, 3), fx::uniform(rng, -3, 3)});
    for (int i = 0; i < 4; ++i) b.push_back({fx::uniform(rng, -3, 3), fx::uniform(rng, -3, 3)});
    EXPECT_EQ(bezout_degree(LatticePolygon::hull(a), LatticePolygon::hull(b)), fx::mixed_area_oracle(a, b));
  }
  const auto simplex = LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(bezout_degree(simplex, simplex), 1);
  // Two different half-squares still meet twice.
  EXPECT_EQ(bezout_degree(LatticePolygon::hull({{0, 0}, {1, 0}, {1, 1}}), LatticePolygon::hull({{0, 0}, {0, 1}, {1, 1}})),
            2);
}

TEST(Intersection, StableEqualsOracleOnRandomPairs) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 40; ++k) {
    const auto a = corner_locus(fx::random_polynomial(rng, 3));
    const auto b = translate(corner_locus(fx::random_polynomial(rng, 2)), fx::random_point(rng, 4, 2));
    const auto expected = stable_intersection(a, b);
    EXPECT_EQ(perturbation_oracle(a, b, RationalPoint(generic_direction(a, b))), expected);
    EXPECT_EQ(expected.degree(), bezout_degree(newton_polygon(a), newton_polygon(b)));
  }
}

TEST(Intersection, Symmetric) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 30; ++k) {
    const auto a = corner_locus(fx::random_polynomial(rng, 3));
    const auto b = translate(corner_locus(fx::random_polynomial(rng, 3)), fx::pt(fx::uniform(rng, -2, 2), 0));
    EXPECT_EQ(stable_intersection(a, b), stable_intersection(b, a));
  }
}

TEST(Intersection, WeightsMultiply) {
  // A weight-2 line meets a line with multiplicity 2.
  auto doubled = fx::line(pt(0, 0));
  for (auto& r : doubled.rays) r.weight = 2;
  EXPECT_EQ(stable_intersection(doubled, fx::line(pt(2, 1))), Divisor::point(pt(1, 1), 2));
}
