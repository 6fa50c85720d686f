#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tropjac/error.hpp"
#include "tropjac/jacobian.hpp"

using namespace tropjac;
using fx::pt;

TEST(Jacobian, CycleLengths) {
  EXPECT_EQ(parametrize_cycles(fx::load("triangle.json")).lengths(), (std::vector<Rational>{Rational(3)}));
  EXPECT_EQ(parametrize_cycles(fx::load("cubic.json")).lengths(), (std::vector<Rational>{Rational(6)}));
  EXPECT_EQ(parametrize_cycles(fx::load("tail.json")).lengths(), (std::vector<Rational>{Rational(3)}));
  EXPECT_EQ(parametrize_cycles(fx::load("figure_eight.json")).lengths(),
            (std::vector<Rational>{Rational(3), Rational(3)}));
}

TEST(Jacobian, LengthIsLatticePerimeterOfTheFace) {
  // Oracle: sum of lattice lengths of the cycle's edges.
  for (const auto& [name, c] : fx::bouquet_corpus()) {
    const auto system = parametrize_cycles(c);
    for (const auto& cycle : system.cycles) {
      Rational total;
      for (auto e : cycle.edges) total += edge_geometry(c, e).lattice_length;
      EXPECT_EQ(cycle.length, total) << name;
      EXPECT_EQ(cycle.vertices.size(), cycle.edges.size());
    }
  }
}

TEST(Jacobian, CyclesRunCounterclockwise) {
  for (const auto& [name, c] : fx::bouquet_corpus()) {
    const auto system = parametrize_cycles(c);
    for (const auto& cycle : system.cycles) {
      Rational twice_area;
      for (std::size_t k = 0; k < cycle.positions.size(); ++k) {
        twice_area += cross(cycle.positions[k], cycle.positions[(k + 1) % cycle.positions.size()]);
      }
      EXPECT_GT(twice_area.sign(), 0) << name;
    }
  }
}

TEST(Jacobian, PointAtAndProjectAreInverse) {
  std::mt19937_64 rng(51);
  for (const auto& [name, c] : fx::bouquet_corpus()) {
    const auto system = parametrize_cycles(c);
    for (std::size_t i = 0; i < system.genus(); ++i) {
      const auto& cycle = system.cycles[i];
      for (int k = 0; k < 20; ++k) {
        const Rational lambda = fx::random_rational(rng, 40, 7);
        const auto p = cycle.point_at(lambda);
        EXPECT_TRUE(locate(c, p).on_curve());
        const auto image = project_point(system, p);
        const Rational expected = mod(lambda, cycle.length);
        if (image.cycle) {
          EXPECT_EQ(*image.cycle, i);
          EXPECT_EQ(image.coordinate, expected) << name;
        } else {
          // The center point O_i.
          EXPECT_EQ(expected, Rational(0)) << name;
        }
      }
    }
  }
}

TEST(Jacobian, ReversalAndShift) {
  const auto c = fx::load("triangle.json");
  ParametrizationOptions reversed;
  reversed.reverse = {true};
  ParametrizationOptions shifted;
  shifted.base_shift = {Rational(1, 2)};
  const auto plain = parametrize_cycles(c);
  const auto rev = parametrize_cycles(c, reversed);
  const auto sh = parametrize_cycles(c, shifted);
  const RationalPoint p{Rational(1, 2), Rational(1, 2)};
  const auto a = project_point(plain, p).coordinate;
  EXPECT_EQ(project_point(rev, p).coordinate, mod(-a, Rational(3)));
  EXPECT_EQ(project_point(sh, p).coordinate, mod(a - Rational(1, 2), Rational(3)));
}

TEST(Jacobian, AbelIsAdditive) {
  std::mt19937_64 rng(52);
  const auto c = fx::load("figure_eight.json");
  const auto system = parametrize_cycles(c);
  auto random_divisor = [&]() {
    Divisor d;
    for (int k = 0; k < 3; ++k) {
      const auto& cycle = system.cycles[static_cast<std::size_t>(fx::uniform(rng, 0, 1))];
      d.add(cycle.point_at(fx::random_rational(rng, 12, 4)), fx::uniform(rng, -2, 2));
    }
    return d;
  };
  for (int k = 0; k < 30; ++k) {
    const auto d1 = random_divisor();
    const auto d2 = random_divisor();
    const auto a1 = abel_coordinate(d1, system);
    const auto a2 = abel_coordinate(d2, system);
    const auto sum = abel_coordinate(d1 + d2, system);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_EQ(sum.residues[i], mod(a1.residues[i] + a2.residues[i], system.cycles[i].length));
    }
    EXPECT_EQ(sum.degree, a1.degree + a2.degree);
  }
}

TEST(Jacobian, DistinctPointsOnAGenusOneCycleAreNotEquivalent) {
  const auto c = fx::load("triangle.json");
  const auto system = parametrize_cycles(c);
  const auto& cycle = system.cycles[0];
  for (int a = 0; a < 12; ++a) {
    for (int b = 0; b < 12; ++b) {
      const auto pa = Divisor::point(cycle.point_at(Rational(a, 4)));
      const auto pb = Divisor::point(cycle.point_at(Rational(b, 4)));
      EXPECT_EQ(linearly_equivalent(pa, pb, c), a == b);
    }
  }
  EXPECT_FALSE(linearly_equivalent(Divisor::point(pt(0, 0)), Divisor(), c));
}

TEST(Jacobian, OffCurvePointIsRejected) {
  const auto system = parametrize_cycles(fx::load("triangle.json"));
  EXPECT_THROW(project_point(system, pt(4, 4)), PreconditionError);
}

TEST(Jacobian, Refusals) {
  const auto d = Divisor::point(pt(0, 0));
  EXPECT_THROW(linearly_equivalent(d, d, fx::load("nonreduced.json")), UnsupportedHypotheses);
  const auto theta = fx::load("theta.json");
  const auto v = Divisor::point(theta.vertices[0]);
  EXPECT_THROW(linearly_equivalent(v, v, theta), UnsupportedHypotheses);
  EXPECT_THROW(parametrize_cycles(theta), UnsupportedHypotheses);
}

TEST(Jacobian, SigmaIsTranslationInvariantAlongTheCurveFamily) {
  const auto system = parametrize_cycles(fx::load("cubic.json"));
  const auto s = sigma(system, fx::line(pt(0, 0)));
  EXPECT_EQ(s.degree, 3);
  EXPECT_EQ(sigma(system, fx::line({Rational(7, 3), Rational(-5, 2)})), s);
}
