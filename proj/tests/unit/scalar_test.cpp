// Copyright 2026 The dso_tree Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "dso_tree/errors.hpp"
#include "dso_tree/scalar.hpp"

namespace dso_tree {
namespace {

TEST(ParseRational, ReadsFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-1.5e-2"), Rational(-3, 200));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(parse_rational(" 0.5 "), Rational(1, 2));
  EXPECT_EQ(parse_rational("1e3"), Rational(1000));
  EXPECT_EQ(parse_rational("0.5/0.25"), Rational(2));
}

// Digit strings with a leading zero must not be read as octal.
TEST(ParseRational, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.09"), Rational(9, 100));
  EXPECT_EQ(parse_rational("007"), Rational(7));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("0.000"), Rational(0));
}

TEST(ParseRational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
  EXPECT_THROW(parse_rational("."), ParseError);
  EXPECT_THROW(parse_rational("1e"), ParseError);
}

TEST(ShortestRational, RecoversTheDecimalLiteral) {
  EXPECT_EQ(shortest_rational(0.1), Rational(1, 10));
  EXPECT_EQ(shortest_rational(-2.75), Rational(-11, 4));
  EXPECT_EQ(shortest_rational(0.09), Rational(9, 100));
  EXPECT_EQ(shortest_rational(1e-7), Rational(1, 10000000));
  EXPECT_NE(scalar_from_double<Rational>(0.1), Rational(1, 10));
}

TEST(FormatScalar, ExactAndFloating) {
  EXPECT_EQ(format_scalar(Rational(3, 4)), "3/4");
  EXPECT_EQ(format_scalar(Rational(-2)), "-2");
  EXPECT_EQ(format_scalar(0.25), "0.25");
}

TEST(Integrality, ExactAndTolerant) {
  EXPECT_TRUE(is_integral(Rational(4, 2)));
  EXPECT_FALSE(is_integral(Rational(1, 3)));
  EXPECT_TRUE(is_integral(3.0000000000001));
  EXPECT_FALSE(is_integral(3.1));
  EXPECT_EQ(to_integer(Rational(6, 2)), 3);
  EXPECT_THROW(to_integer(Rational(1, 2)), ValueError);
}

TEST(NearlyEqual, RelativeForDoubleExactForRational) {
  EXPECT_TRUE(nearly_equal(1.0, 1.0 + 1e-14));
  EXPECT_FALSE(nearly_equal(1.0, 1.0 + 1e-9));
  EXPECT_FALSE(nearly_equal(Rational(1), Rational(1) + Rational(1, 1000000000)));
  EXPECT_EQ(snap_to_zero(1e-15, 1.0), 0.0);
  EXPECT_EQ(snap_to_zero(Rational(1, 1000000000000000LL), Rational(1)),
            Rational(1, 1000000000000000LL));
}

}  // namespace
}  // namespace dso_tree
