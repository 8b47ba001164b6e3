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

#include "pcg/model.hpp"
#include "test_support.hpp"

namespace pcg {
namespace {

using testing::table;

TEST(CoreModel, T1IsValid) {
  EXPECT_TRUE(check_game(testing::t1_spec()).empty());
  const Game g = testing::t1();
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g.priority(0, 1), 2);
  EXPECT_EQ(g.priority(1, 1), 1);
  EXPECT_EQ(g.eval(0, 0, 0, 1), ExtCost(1));
}

TEST(CoreModel, EmptyStrategySpaceRejected) {
  GameSpec spec = testing::t1_spec();
  spec.strategy_spaces[0] = StrategySpace::singleton({});
  try {
    build_game(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationFailed);
    EXPECT_FALSE(e.diagnostics().empty());
  }
}

TEST(CoreModel, MissingTableEntryRejected) {
  GameSpec spec = testing::t1_spec();
  TableDelay d(4);
  for (int x = 0; x <= 4; ++x) {
    for (int y = 1; x + y <= 4; ++y) {
      if (x == 0 && y == 2) continue;
      d.set(x, y, ExtCost(2 * x + y));
    }
  }
  ASSERT_EQ(d.missing(), (std::vector<std::pair<int, int>>{{0, 2}}));
  spec.delays[0] = d;
  try {
    build_game(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationFailed);
    bool named = false;
    for (const auto& diag : e.diagnostics()) {
      named = named || diag.message.find("x=0,y=2") != std::string::npos;
    }
    EXPECT_TRUE(named);
  }
}

TEST(CoreModel, TableBoundTooSmallForPlayersRejected) {
  GameSpec spec = testing::t1_spec();
  spec.delays[0] = table(1, [](int x, int y) { return 2 * x + y; });
  EXPECT_FALSE(check_game(spec).empty());
}

TEST(CoreModel, EvaluateDelayExamples) {
  const DelaySpec affine = AffineDelay{2, 1};
  EXPECT_EQ(evaluate_delay(affine, 1, 3), ExtCost(7));
  const DelaySpec classic = ClassicDelay{{ExtCost(1), ExtCost(4), ExtCost(9)}};
  EXPECT_EQ(evaluate_delay(classic, 0, 3), ExtCost(9));
  EXPECT_TRUE(evaluate_delay(classic, 2, 1).is_infinite());
  const DelaySpec t = table(4, [](int x, int y) { return 2 * x + y; });
  EXPECT_EQ(evaluate_delay(t, 0, 1), ExtCost(1));
}

TEST(CoreModel, OutOfBoundLookupThrows) {
  const DelaySpec t = table(3, [](int x, int y) { return x + y; });
  try {
    (void)evaluate_delay(t, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfBound);
  }
}

TEST(CoreModel, AxiomsHoldForLinearTable) {
  EXPECT_TRUE(
      validate_delay_properties(table(4, [](int x, int y) { return 2 * x + y; }), 4)
          .empty());
}

TEST(CoreModel, IgnoringPriorityBreaksReplacement) {
  const auto report =
      validate_delay_properties(table(3, [](int, int y) { return y; }), 3);
  ASSERT_FALSE(report.empty());
  bool found = false;
  for (const auto& v : report) {
    if (v.axiom == DelayAxiom::kReplacement && v.x == 0 && v.y == 2) {
      found = true;
      EXPECT_EQ(v.lhs, ExtCost(2));
      EXPECT_EQ(v.rhs, ExtCost(1));
    }
  }
  EXPECT_TRUE(found);
}

TEST(CoreModel, DecreasingInXBreaksMonotonicity) {
  const auto report =
      validate_delay_properties(table(3, [](int x, int y) { return 10 - x + y; }), 3);
  bool found = false;
  for (const auto& v : report) found = found || v.axiom == DelayAxiom::kMonotoneX;
  EXPECT_TRUE(found);
}

// Independent check of the three axioms for the affine form on a grid.
TEST(CoreModel, AffineSatisfiesAxiomsExhaustively) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const Rational alpha = make_rational(a, 2);
      const Rational beta = make_rational(b, 3);
      const DelaySpec d = AffineDelay{alpha, beta};
      EXPECT_TRUE(validate_delay_properties(d, 12).empty());
      auto f = [&](int x, int y) {
        Rational v = alpha * (Rational(x) + make_rational(y + 1, 2)) + beta;
        v.canonicalize();
        return v;
      };
      for (int x = 0; x <= 12; ++x) {
        for (int y = 1; x + y <= 12; ++y) {
          EXPECT_EQ(evaluate_delay(d, x, y), ExtCost(f(x, y)));
          EXPECT_LE(f(x, y), f(x + y - 1, 1));
        }
      }
    }
  }
}

TEST(CoreModel, ClassicWrappedAxiomsDependOnMonotoneBase) {
  EXPECT_TRUE(
      validate_delay_properties(ClassicDelay{{ExtCost(1), ExtCost(4), ExtCost(9)}}, 3)
          .empty());
  EXPECT_FALSE(
      validate_delay_properties(ClassicDelay{{ExtCost(4), ExtCost(1), ExtCost(9)}}, 3)
          .empty());
}

TEST(CoreModel, PriorityConsistency) {
  EXPECT_TRUE(PriorityFunction::consistent({1, 2, 2}, 3).is_consistent());
  EXPECT_FALSE(PriorityFunction::per_resource({{1, 2}, {2, 1}}).is_consistent());
  EXPECT_TRUE(PriorityFunction::per_resource({{1, 2}, {1, 2}}).is_consistent());
}

TEST(CoreModel, PlayerSpecificDelaysAreUsedPerPlayer) {
  GameSpec spec = testing::t1_spec();
  spec.player_specific = true;
  spec.player_delays = {
      {table(4, [](int x, int y) { return x + y; }), table(4, [](int x, int y) { return x + y; })},
      {table(4, [](int x, int y) { return 5 * x + y; }),
       table(4, [](int x, int y) { return 5 * x + y; })}};
  const Game g = build_game(spec);
  EXPECT_EQ(g.eval(0, 0, 1, 1), ExtCost(2));
  EXPECT_EQ(g.eval(1, 0, 1, 1), ExtCost(6));
}

}  // namespace
}  // namespace pcg
