// Copyright 2026 The pcg Authors
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


#include <gtest/gtest.h>

#include "pcg/error.hpp"
#include "pcg/ext_cost.hpp"

namespace pcg {
namespace {

TEST(ExtCost, ParsesAndCanonicalizes) {
  EXPECT_EQ(ExtCost::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(ExtCost::parse("3").to_string(), "3/1");
  EXPECT_EQ(ExtCost::parse("0/5").to_string(), "0/1");
  EXPECT_TRUE(ExtCost::parse("inf").is_infinite());
  EXPECT_EQ(ExtCost::infinity().to_string(), "inf");
}

TEST(ExtCost, RejectsMalformedText) {
  for (const char* bad : {"3/0", "-1", "abc", "", "1/", "/2", "1.5"}) {
    try {
      (void)ExtCost::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(ExtCost, AdditionSaturatesAtInfinity) {
  const ExtCost inf = ExtCost::infinity();
  EXPECT_TRUE((inf + ExtCost(3)).is_infinite());
  EXPECT_TRUE((ExtCost(3) + inf).is_infinite());
  EXPECT_EQ(ExtCost::parse("1/2") + ExtCost::parse("1/3"), ExtCost::parse("5/6"));
}

TEST(ExtCost, OrderPlacesInfinityAboveEveryFinite) {
  const ExtCost inf = ExtCost::infinity();
  EXPECT_LT(ExtCost(1000000), inf);
  EXPECT_EQ(inf, ExtCost::infinity());
  EXPECT_LT(ExtCost::parse("1/3"), ExtCost::parse("1/2"));
  EXPECT_EQ(ExtCost::parse("2/4"), ExtCost::parse("1/2"));
}

TEST(ExtCost, FiniteDifferenceIsExact) {
  EXPECT_EQ(ExtCost::parse("7/3") - ExtCost(1), Rational(4, 3));
}

TEST(ExtCost, ApproximationOnlyOnRequest) {
  EXPECT_DOUBLE_EQ(ExtCost::parse("1/4").approx(), 0.25);
}

}  // namespace
}  // namespace pcg
