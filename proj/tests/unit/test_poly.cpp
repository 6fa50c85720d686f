#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tropjac/error.hpp"
#include "tropjac/poly.hpp"

using namespace tropjac;
using fx::pt;

namespace {

// How many terms attain the optimum at p.
int attaining(const TropicalPolynomial& f, const RationalPoint& p) {
  const auto best = evaluate(f, p);
  int n = 0;
  for (const auto& [e, c] : f.terms) {
    if (c + Rational(e.x) * p.x + Rational(e.y) * p.y == best) ++n;
  }
  return n;
}

}  // namespace

TEST(Poly, Parse) {
  const auto f = parse_polynomial("3 + (-1/2)*x^2*y + x*y + 1.5*y");
  ASSERT_EQ(f.terms.size(), 4U);
  EXPECT_EQ(f.terms.at({0, 0}), Rational(3));
  EXPECT_EQ(f.terms.at({2, 1}), Rational(-1, 2));
  EXPECT_EQ(f.terms.at({1, 1}), Rational(0));
  EXPECT_EQ(f.terms.at({0, 1}), Rational(3, 2));
}

TEST(Poly, TermsMultiplyTropically) {
  const auto f = parse_polynomial("2*x*3*x");
  ASSERT_EQ(f.terms.size(), 1U);
  EXPECT_EQ(f.terms.at({2, 0}), Rational(5));
}

TEST(Poly, UnicodeMinus) {
  const auto f = parse_polynomial("\xE2\x88\x92" "2*x + 0");
  EXPECT_EQ(f.terms.at({1, 0}), Rational(-2));
}

TEST(Poly, DuplicatesMergeBySemiring) {
  EXPECT_EQ(parse_polynomial("1*x + 4*x").terms.at({1, 0}), Rational(4));
  EXPECT_EQ(parse_polynomial("1*x + 4*x", Semiring::min_plus).terms.at({1, 0}), Rational(1));
}

TEST(Poly, ErrorsReportOffset) {
  try {
    parse_polynomial("1 + x^ + y");
    FAIL() << "accepted bad input";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 7"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_polynomial(""), InputError);
  EXPECT_THROW(parse_polynomial("x + + y"), InputError);
  EXPECT_THROW(parse_polynomial("z"), InputError);
}

TEST(Poly, TextRoundTrip) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 50; ++k) {
    const auto f = fx::random_polynomial(rng, 4);
    EXPECT_EQ(parse_polynomial(to_string(f)), f);
  }
}

TEST(Poly, Evaluate) {
  const auto f = parse_polynomial("0 + x + y");
  EXPECT_EQ(evaluate(f, pt(2, -1)), Rational(2));
  const auto g = parse_polynomial("0 + x + y", Semiring::min_plus);
  EXPECT_EQ(evaluate(g, pt(2, -1)), Rational(-1));
}

TEST(Poly, LineCornerLocus) {
  const auto c = corner_locus(parse_polynomial("0 + x + y"));
  EXPECT_EQ(canonical(c), canonical(fx::line(pt(0, 0))));
  const auto shifted = corner_locus(parse_polynomial("0 + (-2)*x + 1*y"));
  EXPECT_EQ(canonical(shifted), canonical(fx::line(pt(2, -1))));
}

TEST(Poly, MinPlusIsThePointReflection) {
  std::mt19937_64 rng(72);
  for (int k = 0; k < 20; ++k) {
    auto f = fx::random_polynomial(rng, 3);
    auto g = f;
    g.semiring = Semiring::min_plus;
    for (auto& [e, c] : g.terms) c = -c;
    EXPECT_EQ(canonical(corner_locus(g)), canonical(negate(corner_locus(f))));
  }
}

TEST(Poly, CornerLocusIsWhereTheOptimumIsAttainedTwice) {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 40; ++k) {
    const auto f = fx::random_polynomial(rng, 4, k % 2 ? Semiring::min_plus : Semiring::max_plus);
    const auto c = corner_locus(f);
    // Interior points of every edge and ray.
    for (const auto& piece : pieces(c)) {
      const Rational s = piece.length ? *piece.length / Rational(3) : Rational(5, 3);
      EXPECT_GE(attaining(f, piece.at(s)), 2) << to_string(f);
    }
    const auto stars = star_table(c);
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
      EXPECT_GE(attaining(f, c.vertices[v]), stars[v].size() > 2 ? 3 : 2) << to_string(f);
    }
    // Random points off the curve attain it once.
    for (int j = 0; j < 20; ++j) {
      const auto p = fx::random_point(rng, 30, 7);
      if (!locate(c, p).on_curve()) {
        EXPECT_EQ(attaining(f, p), 1) << to_string(f) << " at " << to_string(p);
      }
    }
  }
}

TEST(Poly, CollinearSupport) {
  const auto c = corner_locus(parse_polynomial("0 + 2*x + 3*x^2"));
  // Vertical lines at x = -1 and x = -2, each a two-ray vertex.
  EXPECT_EQ(c.vertices.size(), 2U);
  EXPECT_EQ(c.rays.size(), 4U);
  EXPECT_TRUE(validate(c).valid());
  const auto sub = dual_subdivision(parse_polynomial("0 + 2*x + 3*x^2"));
  EXPECT_EQ(sub.cells.size(), 2U);
}

TEST(Poly, SubdivisionCellsTileTheHull) {
  std::mt19937_64 rng(74);
  for (int k = 0; k < 40; ++k) {
    const auto f = fx::random_full_polynomial(rng, static_cast<int>(fx::uniform(rng, 1, 4)));
    const auto sub = dual_subdivision(f);
    std::int64_t total = 0;
    for (const auto& cell : sub.cells) {
      total += cell.polygon.twice_area();
      // The plane passes through the cell's corners and dominates every term.
      for (auto v : cell.polygon.vertices()) {
        EXPECT_EQ(cell.alpha * Rational(v.x) + cell.beta * Rational(v.y) + cell.gamma, f.terms.at(v));
      }
      for (const auto& [e, c] : f.terms) {
        EXPECT_GE(cell.alpha * Rational(e.x) + cell.beta * Rational(e.y) + cell.gamma, c);
      }
    }
    EXPECT_EQ(total, sub.hull.twice_area());
  }
}

TEST(Poly, SingleTermHasNoCornerLocus) { EXPECT_THROW(corner_locus(parse_polynomial("3*x*y")), InputError); }
