#include <gtest/gtest.h>

#include "exform/rational.hpp"

namespace exform {
namespace {

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2."), 2);
}

// Leading zeros are decimal, never octal or hex prefixes.
TEST(ParseRational, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_rational("0.75"), Rational(3, 4));
  EXPECT_EQ(parse_rational("010"), 10);
  EXPECT_EQ(parse_rational("09/010"), Rational(9, 10));
  EXPECT_EQ(parse_rational("1.05"), Rational(21, 20));
}

TEST(ParseRational, Malformed) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "1.2.3", "0x10", "abc", "1/2/3", "."}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(ToString, Canonical) {
  EXPECT_EQ(to_string(Rational(6, -8)), "-3/4");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

}  // namespace
}  // namespace exform
