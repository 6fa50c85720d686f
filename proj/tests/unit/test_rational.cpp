#include <gtest/gtest.h>

#include <random>

#include "tropjac/error.hpp"
#include "tropjac/rational.hpp"

using tropjac::Rational;

TEST(Rational, Canonical) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_THROW(Rational(1, 0), tropjac::InputError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), tropjac::InputError);
  EXPECT_THROW(Rational::parse("abc"), tropjac::InputError);
  EXPECT_THROW(Rational::parse(""), tropjac::InputError);
}

TEST(Rational, ArithmeticIdentities) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  for (int k = 0; k < 500; ++k) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - b + b, a);
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}

TEST(Rational, FloorAndMod) {
  EXPECT_EQ(Rational(-3, 2).floor(), Rational(-2));
  EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
  EXPECT_EQ(tropjac::mod(Rational(7, 2), Rational(3)), Rational(1, 2));
  EXPECT_EQ(tropjac::mod(Rational(-1, 2), Rational(3)), Rational(5, 2));
  EXPECT_EQ(tropjac::mod(Rational(6), Rational(3)), Rational(0));
  EXPECT_THROW(tropjac::mod(Rational(1), Rational(0)), tropjac::InvariantViolation);
}

TEST(Rational, ToInt64) {
  EXPECT_EQ(Rational(-12).to_int64(), -12);
  EXPECT_THROW(Rational(1, 2).to_int64(), tropjac::InvariantViolation);
}
