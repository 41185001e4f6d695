// Copyright 2026 The almostcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "almostcore/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

namespace almostcore {
namespace {

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).ToString(), "-3/2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0");
  EXPECT_EQ(Rational(8, 4).ToString(), "2");
  EXPECT_EQ(Rational(6, -4).Denominator(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::Parse("17"), Rational(17));
  EXPECT_EQ(Rational::Parse("-3/9"), Rational(-1, 3));
  EXPECT_EQ(Rational::Parse("+4/2"), Rational(2));
  EXPECT_EQ(Rational::Parse("123456789012345678901234567890/3").ToString(),
            "41152263004115226300411522630");
}

TEST(RationalTest, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1.5", " 1", "1/-2",
                          "--1", "1/2/3"}) {
    EXPECT_THROW(Rational::Parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, RoundTripThroughString) {
  for (long long p = -12; p <= 12; ++p) {
    for (long long q = 1; q <= 7; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(Rational::Parse(r.ToString()), r);
    }
  }
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational sum(0);
  for (int i = 1; i <= 10; ++i) sum += Rational(1, i * (i + 1));
  EXPECT_EQ(sum, Rational(10, 11));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  Rational acc(1);
  acc.AddProduct(Rational(2, 3), Rational(3, 4));
  EXPECT_EQ(acc, Rational(3, 2));
  EXPECT_EQ(-Rational(1, 5), Rational(-1, 5));
}

TEST(RationalTest, OrderingAndHelpers) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Abs(Rational(-7, 2)), Rational(7, 2));
  EXPECT_EQ(Min(Rational(1), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(Max(Rational(1), Rational(1, 2)), Rational(1));
  EXPECT_TRUE(Rational(4, 2).IsInteger());
  EXPECT_FALSE(Rational(1, 2).IsInteger());
  EXPECT_EQ(Rational(-3, 4).Sign(), -1);
  EXPECT_DOUBLE_EQ(Rational(1, 4).ToDouble(), 0.25);
  std::ostringstream os;
  os << Rational(5, 10);
  EXPECT_EQ(os.str(), "1/2");
}

}  // namespace
}  // namespace almostcore
