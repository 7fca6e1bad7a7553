#include <gtest/gtest.h>

#include "symbez/errors.hpp"
#include "symbez/parse.hpp"
#include "test_support.hpp"

using namespace symbez;

TEST(Parse, PowerSum) {
  const MultiPoly f = parse_poly("X^5+Y^5+Z^5", 3);
  EXPECT_EQ(f.term_count(), 3U);
  EXPECT_EQ(f.degree(), 5);
  EXPECT_TRUE(is_symmetric(f));
}

TEST(Parse, CyclotomicConstantsReduce) {
  EXPECT_TRUE(parse_poly("omega^2 + omega + 1", 3).is_zero());
  EXPECT_EQ(parse_poly("I^2", 3), parse_poly("-1", 3));
}

TEST(Parse, ElementaryMode) {
  const MultiPoly f = parse_poly("e1*e2 - 9*e3", 3, BasisMode::kElementary);
  const MultiPoly expected = parse_poly("(X+Y+Z)*(X*Y+X*Z+Y*Z) - 9*X*Y*Z", 3);
  EXPECT_EQ(f, expected);
  EXPECT_TRUE(is_symmetric(f));
}

TEST(Parse, SynonymsAndRationals) {
  EXPECT_EQ(parse_poly("x0 + x1 - 3/6*x2", 3), parse_poly("X + Y - 1/2*Z", 3));
  EXPECT_EQ(parse_poly("-(X-Y)^2", 3), parse_poly("-X^2 + 2*X*Y - Y^2", 3));
  EXPECT_EQ(parse_poly("  W ", 4), MultiPoly::variable(4, 3));
}

TEST(Parse, Errors) {
  try {
    parse_poly("X + * Y", 3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(parse_poly("X + foo", 3), ParseError);
  EXPECT_THROW(parse_poly("W + X", 3), ParseError);
  EXPECT_THROW(parse_poly("e1", 3), ParseError);
  EXPECT_THROW(parse_poly("e4", 3, BasisMode::kElementary), ParseError);
  EXPECT_THROW(parse_poly("1/0", 3), ParseError);
  EXPECT_THROW(parse_poly("(X+Y", 3), ParseError);
  EXPECT_THROW(parse_poly("", 3), ParseError);
  EXPECT_THROW(parse_poly("X^", 3), ParseError);
}

TEST(Parse, RenderingRoundTripProperty) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 2;
    const MultiPoly f = symbez::testing::random_homogeneous(rng, n, 1 + t % 5);
    EXPECT_EQ(parse_poly(f.to_string(), n), f) << f.to_string();
  }
}
