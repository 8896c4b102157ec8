#include <gtest/gtest.h>

#include "msi/error.hpp"
#include "msi/rational.hpp"

using namespace msi;

TEST(Rational, CanonicalPrinting) {
  EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(make_rational(4, -2)), "-2");
  EXPECT_EQ(to_string(make_rational(0, 5)), "0");
}

TEST(Rational, DecimalEchoUsesTwelveSignificantDigits) {
  EXPECT_EQ(to_decimal(make_rational(1, 3)), "0.333333333333");
  EXPECT_EQ(to_decimal(make_rational(2, 3)), "0.666666666667");
  EXPECT_EQ(to_decimal(make_rational(6, 5)), "1.2");
  EXPECT_EQ(to_decimal(make_rational(-4, 3)), "-1.33333333333");
  EXPECT_EQ(to_decimal(Rational(0)), "0");
}

TEST(Rational, DecimalEchoRoundsHalfToEven) {
  // 0.5 at the last kept digit: the even neighbour wins.
  EXPECT_EQ(to_decimal(make_rational(125, 100), 2), "1.2");
  EXPECT_EQ(to_decimal(make_rational(135, 100), 2), "1.4");
  EXPECT_EQ(to_decimal(make_rational(1251, 1000), 2), "1.3");
  EXPECT_EQ(to_decimal(make_rational(995, 1000), 2), "1");
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("1.25"), make_rational(5, 4));
  EXPECT_EQ(parse_rational("-0.5"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("+2"), Rational(2));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.", "1.2.3", "--1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, FloorCeilOfNegatives) {
  EXPECT_EQ(floor(make_rational(-1, 2)), Integer(-1));
  EXPECT_EQ(ceil(make_rational(-1, 2)), Integer(0));
  EXPECT_EQ(ceil(make_rational(7, 2)), Integer(4));
}
