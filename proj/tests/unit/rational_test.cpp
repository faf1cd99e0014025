#include <gtest/gtest.h>

#include "mixvol/error.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {
namespace {

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3/2"), ratio(3, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("6/4"), ratio(3, 2));
  EXPECT_EQ(parse_rational("-0"), Rational(0));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/-2", "x", " 1", "1 "}) {
    EXPECT_THROW(parse_rational(bad), DomainError) << bad;
  }
}

TEST(ToString, UsesLowestTermsAndDropsUnitDenominator) {
  EXPECT_EQ(to_string(ratio(6, 4)), "3/2");
  EXPECT_EQ(to_string(ratio(-8, 4)), "-2");
  EXPECT_EQ(to_string(Integer(-17)), "-17");
}

TEST(Combinatorics, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(LexCompare, OrdersCoordinatewise) {
  const RationalVector a{1, 2}, b{1, 3}, c{ratio(1, 2), 9};
  EXPECT_TRUE(LexLess{}(a, b));
  EXPECT_TRUE(LexLess{}(c, a));
  EXPECT_FALSE(LexLess{}(a, a));
}

}  // namespace
}  // namespace mixvol
