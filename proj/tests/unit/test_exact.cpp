#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/exact.hpp"
#include "support/oracles.hpp"

using namespace vmeasure;

TEST(ParseRational, CanonicalForms) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(ParseRational, RejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
}

TEST(ExtendedRational, InfinityConventions) {
  const auto inf = ExtendedRational::infinity();
  EXPECT_EQ(inf + ExtendedRational(Rational(1, 3)), inf);
  EXPECT_EQ(ExtendedRational(2) * inf, inf);
  EXPECT_EQ(ExtendedRational(0) * inf, ExtendedRational(0));
  EXPECT_EQ(inf * ExtendedRational(0), ExtendedRational(0));
  EXPECT_GT(inf, ExtendedRational(Rational(1000000)));
  EXPECT_EQ(ExtendedRational::parse("inf"), inf);
  EXPECT_EQ(ExtendedRational::parse("5/10").str(), "1/2");
  EXPECT_THROW(inf.value(), Error);
}

TEST(QuadraticSurd, CanonicalRoots) {
  EXPECT_EQ(QuadraticSurd::sqrt(25), QuadraticSurd(5));
  EXPECT_EQ(QuadraticSurd::sqrt(Rational(9, 4)), QuadraticSurd(Rational(3, 2)));
  EXPECT_EQ(QuadraticSurd::sqrt(20).str(), "2*sqrt(5)");
  EXPECT_EQ(QuadraticSurd::sqrt(Rational(1, 2)).str(), "1/2*sqrt(2)");
  EXPECT_TRUE(QuadraticSurd::sqrt(8).terms().count(2));
}

TEST(QuadraticSurd, MergesRadicandsWithLargePrimeSquares) {
  // 1000003 and 1000033 are prime and beyond trial division.
  const Integer p = 1000003, q = 1000033;
  const auto big = QuadraticSurd::sqrt(Rational(Integer(p * p * q)));
  const auto small = QuadraticSurd::sqrt(Rational(q));
  EXPECT_EQ(big, small * Rational(p));
  EXPECT_TRUE((big - small * Rational(p)).is_zero());
  const auto sum = big + small;
  ASSERT_EQ(sum.terms().size(), 1u);
  EXPECT_EQ(sum.terms().begin()->first, q);
  EXPECT_EQ(sum.terms().begin()->second, Rational(p + 1));
  EXPECT_GT(big, small);
}

TEST(QuadraticSurd, SignOfNearCancellation) {
  // sqrt(2) + sqrt(3) vs sqrt(10): 3.1462... vs 3.1622...
  const auto lhs = QuadraticSurd::sqrt(2) + QuadraticSurd::sqrt(3);
  const auto rhs = QuadraticSurd::sqrt(10);
  EXPECT_LT(lhs, rhs);
  // 99/70 is a convergent of sqrt(2): 99/70 - sqrt(2) ~ 7.2e-5 > 0.
  EXPECT_EQ((QuadraticSurd(Rational(99, 70)) - QuadraticSurd::sqrt(2)).sign(), 1);
  EXPECT_EQ((QuadraticSurd(Rational(140, 99)) - QuadraticSurd::sqrt(2)).sign(), -1);
}

TEST(QuadraticSurd, OrderingAgreesWithDoubles) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> radicand(1, 60), num(-20, 20);
  for (int i = 0; i < 300; ++i) {
    QuadraticSurd a, b;
    for (int k = 0; k < 3; ++k) {
      a += QuadraticSurd::sqrt(radicand(rng)) * Rational(num(rng), 7);
      b += QuadraticSurd::sqrt(radicand(rng)) * Rational(num(rng), 5);
    }
    const double da = a.to_double(), db = b.to_double();
    if (std::abs(da - db) < 1e-9) continue;
    EXPECT_EQ(a < b, da < db) << a.str() << " vs " << b.str();
  }
}

TEST(QuadraticSurd, EnclosureContainsValue) {
  const auto x = QuadraticSurd::sqrt(2) * Rational(3) - QuadraticSurd::sqrt(7);
  const auto [lo, hi] = x.enclosure(40);
  EXPECT_LE(lo.get_d(), x.to_double());
  EXPECT_GE(hi.get_d(), x.to_double());
  EXPECT_LT(Rational(hi - lo), Rational(1, 1 << 30));
}

TEST(ExtendedReal, ArithmeticAndComparison) {
  const ExtendedReal five(QuadraticSurd::sqrt(25));
  EXPECT_EQ(five.as_rational(), Rational(5));
  EXPECT_EQ(ExtendedRational(2) * ExtendedReal(QuadraticSurd::sqrt(2)),
            ExtendedReal(QuadraticSurd::sqrt(8)));
  EXPECT_EQ(ExtendedRational(0) * ExtendedReal::infinity(), ExtendedReal(0));
  EXPECT_TRUE((ExtendedReal(1) + ExtendedReal::infinity()).is_infinite());
  EXPECT_LT(ExtendedReal(QuadraticSurd::sqrt(2)), ExtendedReal(Rational(3, 2)));
  EXPECT_EQ(ExtendedReal::infinity().str(), "inf");
}

TEST(ExtendedReal, ApproximateTolerance) {
  const auto a = ExtendedReal::approximate(std::sqrt(2.0));
  EXPECT_TRUE(same_value(a, ExtendedReal(QuadraticSurd::sqrt(2))));
  EXPECT_FALSE(same_value(a, ExtendedReal(Rational(1414, 1000))));
  EXPECT_TRUE(at_most(ExtendedReal::approximate(1.0 + 1e-12), ExtendedReal(1)));
  EXPECT_TRUE((a + ExtendedReal(1)).is_approximate());
}
