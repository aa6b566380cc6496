#include <gtest/gtest.h>

#include <random>

#include "tpmine/fraction.hpp"

using tpmine::Fraction;

TEST(Fraction, NormalizesSignAndTerms) {
  Fraction f(6, -8);
  EXPECT_EQ(f.num(), -3);
  EXPECT_EQ(f.den(), 4);
  EXPECT_EQ(Fraction(0, 5), Fraction(0));
  EXPECT_THROW(Fraction(1, 0), std::domain_error);
}

TEST(Fraction, ParsesDecimalsExactly) {
  EXPECT_EQ(Fraction::parse_decimal("0.05"), Fraction(1, 20));
  EXPECT_EQ(Fraction::parse_decimal("25"), Fraction(25));
  EXPECT_EQ(Fraction::parse_decimal("12.5"), Fraction(25, 2));
  EXPECT_EQ(Fraction::parse_decimal("-0.5"), Fraction(-1, 2));
  EXPECT_EQ(Fraction::parse_decimal(".5"), Fraction(1, 2));
  for (const char* bad : {"", "-", ".", "1e3", "1.2.3", "abc", "0x10", " 1"}) {
    EXPECT_THROW(Fraction::parse_decimal(bad), std::invalid_argument) << bad;
  }
}

TEST(Fraction, FixedRenderingRoundsHalfAwayFromZero) {
  EXPECT_EQ(Fraction(29, 40).to_fixed(3), "0.725");
  EXPECT_EQ((Fraction(29, 40) * Fraction(100)).to_fixed(3), "72.500");
  EXPECT_EQ((Fraction(-2, 3) * Fraction(100)).to_fixed(3), "-66.667");
  EXPECT_EQ(Fraction(1, 8).to_fixed(2), "0.13");
  EXPECT_EQ(Fraction(-1, 8).to_fixed(2), "-0.13");
  EXPECT_EQ(Fraction(-1, 1000).to_fixed(2), "0.00");
  EXPECT_EQ(Fraction(7).to_fixed(0), "7");
}

TEST(Fraction, TrimmedRendering) {
  EXPECT_EQ(Fraction(125, 2).to_trimmed(2), "62.5");
  EXPECT_EQ(Fraction(125, 4).to_trimmed(2), "31.25");
  EXPECT_EQ(Fraction(25).to_trimmed(2), "25");
  EXPECT_EQ(Fraction(1, 20).to_trimmed(6), "0.05");
}

TEST(Fraction, FloorAndCeil) {
  EXPECT_EQ(Fraction(4, 5).ceil(), 1);
  EXPECT_EQ(Fraction(4, 5).floor(), 0);
  EXPECT_EQ(Fraction(-4, 5).ceil(), 0);
  EXPECT_EQ(Fraction(-4, 5).floor(), -1);
  EXPECT_EQ(Fraction(12).ceil(), 12);
  EXPECT_EQ(Fraction(12).floor(), 12);
}

TEST(Fraction, ArithmeticAgreesWithCrossMultiplicationProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 50);
  for (int iter = 0; iter < 2000; ++iter) {
    std::int64_t an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    Fraction a(an, ad), b(bn, bd);
    EXPECT_EQ(a + b, Fraction(an * bd + bn * ad, ad * bd));
    EXPECT_EQ(a - b, Fraction(an * bd - bn * ad, ad * bd));
    EXPECT_EQ(a * b, Fraction(an * bn, ad * bd));
    if (bn != 0) {
      EXPECT_EQ(a / b, Fraction(an * bd, ad * bn));
    }
    EXPECT_EQ(a < b, an * bd < bn * ad);
    EXPECT_EQ(a == b, an * bd == bn * ad);
  }
}
