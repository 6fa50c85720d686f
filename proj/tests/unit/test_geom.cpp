#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/geom.hpp"

using namespace tropjac;

TEST(Geom, CrossDotRotate) {
  EXPECT_EQ(cross(IntVector{1, 0}, IntVector{0, 1}), 1);
  EXPECT_EQ(dot(IntVector{2, 3}, IntVector{4, -1}), 5);
  EXPECT_EQ(rotate_ccw({1, 0}), (IntVector{0, 1}));
  EXPECT_EQ(rotate_cw({1, 0}), (IntVector{0, -1}));
  EXPECT_EQ(rotate_cw(rotate_ccw({3, -7})), (IntVector{3, -7}));
}

TEST(Geom, PrimitiveVector) {
  EXPECT_TRUE(PrimitiveVector::is_primitive({2, 3}));
  EXPECT_FALSE(PrimitiveVector::is_primitive({2, 4}));
  EXPECT_FALSE(PrimitiveVector::is_primitive({0, 0}));
  EXPECT_THROW(PrimitiveVector(4, 6), InputError);
  const auto d = primitive_decompose({-6, 9});
  EXPECT_EQ(d.direction.vec(), (IntVector{-2, 3}));
  EXPECT_EQ(d.lattice_length, 3);
  EXPECT_THROW(primitive_decompose({0, 0}), InputError);
}

TEST(Geom, RationalDecompose) {
  const auto d = rational_decompose({Rational(3, 2), Rational(-3, 4)});
  EXPECT_EQ(d.direction.vec(), (IntVector{2, -1}));
  EXPECT_EQ(d.lattice_length, Rational(3, 4));
  EXPECT_THROW(rational_decompose({Rational(0), Rational(0)}), InputError);
}

TEST(Geom, Moment) {
  // (P - P0) x v
  EXPECT_EQ(moment({0, 1}, {Rational(2), Rational(5)}, {Rational(0), Rational(0)}), Rational(2));
  // Sliding P along v leaves the moment unchanged.
  const RationalPoint p{Rational(1, 3), Rational(-2)};
  const RationalPoint p0{Rational(5), Rational(1, 7)};
  const IntVector v{2, -3};
  EXPECT_EQ(moment(v, p, p0), moment(v, p + Rational(5, 11) * RationalPoint(v), p0));
}

TEST(Geom, PseudoAngleMatchesAtan2) {
  // Oracle: floating atan2 mapped to [0, 2 pi), on small vectors where
  // distinct angles are far apart.
  std::vector<IntVector> vs;
  for (int x = -4; x <= 4; ++x) {
    for (int y = -4; y <= 4; ++y) {
      if (x != 0 || y != 0) vs.push_back({x, y});
    }
  }
  auto angle = [](IntVector v) {
    double a = std::atan2(static_cast<double>(v.y), static_cast<double>(v.x));
    return a < 0 ? a + 2 * M_PI : a;
  };
  for (auto u : vs) {
    for (auto v : vs) {
      const double du = angle(u);
      const double dv = angle(v);
      const auto c = PseudoAngle(u) <=> PseudoAngle(v);
      if (std::abs(du - dv) < 1e-12) {
        EXPECT_TRUE(c == 0) << to_string(u) << " " << to_string(v);
      } else {
        EXPECT_EQ(c < 0, du < dv) << to_string(u) << " " << to_string(v);
      }
    }
  }
  EXPECT_THROW(PseudoAngle({0, 0}), InvariantViolation);
}

TEST(Geom, PointArithmetic) {
  RationalPoint a{Rational(1, 2), Rational(3)};
  RationalPoint b{Rational(-1, 3), Rational(1, 4)};
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(to_string(a), "(1/2,3)");
  EXPECT_EQ(cross(a, IntVector{1, 0}), Rational(-3));
  EXPECT_EQ(dot(a, IntVector{2, 1}), Rational(4));
}
