#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tropjac/error.hpp"
#include "tropjac/linalg.hpp"
#include "tropjac/param_space.hpp"
#include "tropjac/poly.hpp"

using namespace tropjac;
using fx::pt;

TEST(Linalg, NullSpace) {
  RationalMatrix m = {{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  const auto basis = integer_null_space(m, 3);
  ASSERT_EQ(basis.size(), 2U);
  for (const auto& v : basis) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
  RationalMatrix r = m;
  EXPECT_EQ(rref(r, 3), (std::vector<std::size_t>{0}));
  EXPECT_EQ(r[1][0], Rational(0));
}

TEST(Linalg, NullSpaceOfRandomMatrices) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 50; ++k) {
    const std::size_t rows = static_cast<std::size_t>(fx::uniform(rng, 1, 4));
    const std::size_t cols = static_cast<std::size_t>(fx::uniform(rng, 1, 6));
    RationalMatrix m(rows, std::vector<Rational>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = Rational(fx::uniform(rng, -3, 3));
    }
    RationalMatrix copy = m;
    const auto rank = rref(copy, cols).size();
    const auto basis = integer_null_space(m, cols);
    EXPECT_EQ(basis.size(), cols - rank);
    for (const auto& v : basis) {
      for (const auto& row : m) {
        Rational s;
        for (std::size_t j = 0; j < cols; ++j) s += row[j] * Rational(v[j]);
        EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(ParamSpace, RoundTrip) {
  for (const auto& [name, c] : fx::corpus()) {
    const auto p = params_from_curve(c);
    EXPECT_EQ(curve_from_params(p), c) << name;
    EXPECT_EQ(p.lengths.size(), c.edges.size());
    EXPECT_EQ(closure_cycles(p.type).size(), c.edges.size() + 1 - c.vertices.size()) << name;
  }
}

TEST(ParamSpace, Rejections) {
  const auto parallel = corner_locus(parse_polynomial("0 + 2*x + 3*x^2"));
  EXPECT_THROW(params_from_curve(parallel), PreconditionError);
  auto p = params_from_curve(fx::load("triangle.json"));
  EXPECT_THROW(params_from_curve(fx::load("triangle.json"), 7), PreconditionError);
  auto bad = p;
  bad.lengths[0] = Rational(0);
  EXPECT_THROW(curve_from_params(bad), PreconditionError);
  bad = p;
  bad.lengths[0] += Rational(1);
  try {
    curve_from_params(bad);
    FAIL() << "closure violation accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("closure"), std::string::npos);
  }
}

TEST(ParamSpace, PerturbStaysInTheCone) {
  for (const auto& [name, c] : fx::corpus()) {
    auto p = params_from_curve(c);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      p = perturb(p, seed);
      const auto moved = curve_from_params(p);
      for (const auto& l : p.lengths) EXPECT_GT(l.sign(), 0);
      EXPECT_TRUE(validate(moved).balanced) << name;
      EXPECT_EQ(newton_complex(moved), newton_complex(c)) << name;
      EXPECT_TRUE(same_component(moved, c));
    }
  }
}

TEST(ParamSpace, AnchorBox) {
  PerturbOptions options;
  options.anchor_box = std::pair{pt(-1, -1), pt(1, 1)};
  auto p = params_from_curve(fx::line(pt(0, 0)));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    p = perturb(p, seed, options);
    EXPECT_GE(p.anchor.x, Rational(-1));
    EXPECT_LE(p.anchor.x, Rational(1));
    EXPECT_GE(p.anchor.y, Rational(-1));
    EXPECT_LE(p.anchor.y, Rational(1));
  }
}

TEST(ParamSpace, Degeneration) {
  const auto smooth = corner_locus(parse_polynomial("0 + 1*x + 1*y + 0*x^2 + 3*x*y + 0*y^2"));
  const auto flat = corner_locus(parse_polynomial("0 + 0*x + 0*y + 0*x^2 + 0*x*y + 0*y^2"));
  EXPECT_EQ(flat.vertices.size(), 1U);
  EXPECT_TRUE(is_degeneration(flat, smooth));
  EXPECT_FALSE(is_degeneration(smooth, flat));
  EXPECT_TRUE(same_component(flat, smooth));
  EXPECT_FALSE(same_component(flat, fx::line(pt(0, 0))));
}

TEST(ParamSpace, WalkIsDeterministicAndSigmaConstant) {
  const auto host = parametrize_cycles(fx::load("triangle.json"));
  const auto mobile = fx::load("conic.json");
  const auto a = walk_sigma(host, mobile, 40, 5);
  const auto b = walk_sigma(host, mobile, 40, 5);
  ASSERT_EQ(a.size(), 41U);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].params, b[k].params);
    EXPECT_EQ(a[k].sigma, a.front().sigma);
  }
  const auto c = walk_sigma(host, mobile, 40, 6);
  EXPECT_FALSE(c.back().params == a.back().params);
}
