#include <gtest/gtest.h>

#include <unordered_set>

#include "lya/rational.hpp"

using lya::Rational;

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-2/-4").to_string(), "1/2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
}

TEST(Rational, RejectsMalformedLiterals) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FieldArithmetic) {
  Rational a(1, 3), b(-5, 7);
  EXPECT_EQ(a + b, Rational(-8, 21));
  EXPECT_EQ(a - b, Rational(22, 21));
  EXPECT_EQ(a * b, Rational(-5, 21));
  EXPECT_EQ(a / b, Rational(-7, 15));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE((a / a).is_one());
  Rational acc(1);
  acc.add_product(a, b);
  EXPECT_EQ(acc, Rational(16, 21));
}

TEST(Rational, OrderingAndHash) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(abs(Rational(-3, 4)), Rational(3, 4));
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
  EXPECT_EQ(s.size(), 2u);
}

TEST(Rational, NoOverflowOnLargeProducts) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x *= Rational(1000003, 999983);
  for (int i = 0; i < 200; ++i) x /= Rational(1000003, 999983);
  EXPECT_TRUE(x.is_one());
}
