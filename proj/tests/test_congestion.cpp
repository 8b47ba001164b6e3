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

#include "pcg/congestion.hpp"
#include "pcg/generator.hpp"
#include "pcg/io.hpp"
#include "test_support.hpp"

namespace pcg {
namespace {

using testing::rs;
using testing::table;

constexpr ResourceId a = 0, b = 1;

Game one_resource(std::vector<int> prio, std::function<long(int, int)> fn) {
  GameSpec spec;
  spec.num_players = static_cast<int>(prio.size());
  spec.resources = {"e"};
  for (int i = 0; i < spec.num_players; ++i) {
    spec.strategy_spaces.push_back(StrategySpace::singleton({0}));
  }
  spec.priorities = PriorityFunction::per_resource({prio});
  spec.delays = {table(spec.num_players, fn)};
  return build_game(spec);
}

TEST(Congestion, ViewCountsOnT1) {
  const Game g = testing::t1();
  const State s = State::from_profile({rs({a}), rs({a})});
  const CongestionView va = congestion_view(g, s, a);
  EXPECT_EQ(va.total, 2);
  EXPECT_EQ(va.levels, (std::map<int, int>{{1, 1}, {2, 1}}));
  EXPECT_EQ(va.below(2), 1);
  EXPECT_EQ(va.min_priority(), 1);
  const CongestionView vb = congestion_view(g, s, b);
  EXPECT_EQ(vb.total, 0);
  EXPECT_TRUE(vb.present_levels().empty());
  EXPECT_FALSE(vb.min_priority().has_value());
}

TEST(Congestion, ViewCountsByLevel) {
  const Game g = one_resource({1, 1, 2}, [](int x, int y) { return x + y; });
  const Profile p(3, rs({0}));
  const CongestionView v = congestion_view(g, State::from_profile(p), 0);
  EXPECT_EQ(v.at(1), 2);
  EXPECT_EQ(v.below(2), 2);
  EXPECT_EQ(v.at(2), 1);
  EXPECT_EQ(player_cost(g, p, 2), ExtCost(3));
}

TEST(Congestion, CostsOnT1) {
  const Game g = testing::t1();
  const Profile aa = {rs({a}), rs({a})};
  EXPECT_EQ(player_cost(g, aa, 0), ExtCost(1));
  EXPECT_EQ(player_cost(g, aa, 1), ExtCost(3));
  const Weights w = entry_weights(g, aa, 1);
  EXPECT_EQ(w[a], ExtCost(3));
  EXPECT_EQ(w[b], ExtCost(1));
}

TEST(Congestion, ClassicWrappedInfiniteForLowerPriority) {
  GameSpec spec;
  spec.num_players = 2;
  spec.resources = {"e"};
  spec.strategy_spaces = {StrategySpace::singleton({0}), StrategySpace::singleton({0})};
  spec.priorities = PriorityFunction::per_resource({{1, 2}});
  spec.delays = {ClassicDelay{{ExtCost(1), ExtCost(2)}}};
  const Game g = build_game(spec);
  const Profile p = {rs({0}), rs({0})};
  EXPECT_EQ(player_cost(g, p, 0), ExtCost(1));
  EXPECT_TRUE(player_cost(g, p, 1).is_infinite());
}

TEST(Congestion, LonePlayerSeesBaseDelayEverywhere) {
  GameSpec spec;
  spec.num_players = 1;
  spec.resources = {"a", "b", "c"};
  spec.strategy_spaces = {StrategySpace::singleton({0, 1, 2})};
  spec.priorities = PriorityFunction::consistent({1}, 3);
  const TableDelay d = table(1, [](int x, int y) { return 2 * x + y; });
  spec.delays = {d, d, d};
  const Game g = build_game(spec);
  for (const ExtCost& c : entry_weights(g, Profile{rs({1})}, 0)) EXPECT_EQ(c, ExtCost(1));
}

TEST(Congestion, BetterResponseExamples) {
  const Game g = testing::t1();
  EXPECT_TRUE(is_better_response(g, {rs({a}), rs({a})}, 1, rs({b})));
  EXPECT_FALSE(is_better_response(g, {rs({a}), rs({a})}, 1, rs({a})));
  EXPECT_FALSE(is_better_response(g, {rs({a}), rs({b})}, 0, rs({b})));
}

TEST(Congestion, BestResponseExamples) {
  const Game g = testing::t1();
  const BestResponse br = compute_best_response(g, State::from_profile({rs({a}), rs({a})}), 1);
  EXPECT_EQ(br.strategy, rs({b}));
  EXPECT_EQ(br.cost, ExtCost(1));
  const BestResponse stay =
      compute_best_response(g, State::from_profile({rs({a}), rs({b})}), 1);
  EXPECT_EQ(stay.strategy, rs({b}));
}

TEST(Congestion, BestResponseUniformRankTwo) {
  GameSpec spec;
  spec.num_players = 2;
  spec.resources = {"a", "b", "c"};
  spec.strategy_spaces = {StrategySpace::uniform({0, 1, 2}, 2),
                          StrategySpace::singleton({0})};
  spec.priorities = PriorityFunction::consistent({2, 1}, 3);
  // Player 2 on a pushes player 1's weight for a to 3; b weighs 1, c 2.
  spec.delays = {table(2, [](int x, int y) { return 2 * x + y; }),
                 table(2, [](int x, int y) { return x + y; }),
                 table(2, [](int x, int y) { return 2 * x + y + 1; })};
  const Game g = build_game(spec);
  const State s = State::from_profile({rs({0, 1}), rs({0})});
  const Weights w = entry_weights(g, s, 0);
  EXPECT_EQ(w, (Weights{ExtCost(3), ExtCost(1), ExtCost(2)}));
  EXPECT_EQ(compute_best_response(g, s, 0).strategy, rs({1, 2}));
}

TEST(Congestion, PureNashOnT1) {
  const Game g = testing::t1();
  EXPECT_TRUE(is_pure_nash(g, {rs({a}), rs({b})}));
  EXPECT_TRUE(is_pure_nash(g, {rs({b}), rs({a})}));
  EXPECT_FALSE(is_pure_nash(g, {rs({a}), rs({a})}));
  EXPECT_FALSE(is_pure_nash(g, {rs({b}), rs({b})}));
}

TEST(Congestion, UnplacedPlayerReportsError) {
  const Game g = testing::t1();
  State s(2);
  s.place(0, rs({a}));
  try {
    (void)player_cost(g, s, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPlayerNotPlaced);
  }
  EXPECT_EQ(player_cost(g, s, 0), ExtCost(1));
}

// Properties on random games, checked against the reference evaluator.
class RandomGames : public ::testing::TestWithParam<SpaceKind> {};

TEST_P(RandomGames, AgreesWithReference) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorParams params;
    params.players = 3;
    params.resources = 4;
    params.space = GetParam();
    params.levels = 2 + static_cast<int>(seed % 2);
    params.player_specific = seed % 3 == 0;
    params.infinity_percent = seed % 4 == 0 ? 20 : 0;
    const Game g = instance_game(generate_instance(params, seed));
    const testing::Reference ref = testing::reference_of(g);
    for (const Profile& p : ref.all_profiles()) {
      for (int i = 0; i < g.num_players(); ++i) {
        ASSERT_EQ(player_cost(g, p, i), ref.cost(p, i)) << "seed " << seed;
        // The sum of entry weights over the current strategy is the cost.
        const Weights w = entry_weights(g, p, i);
        ASSERT_EQ(total_weight(p[i], w), ref.cost(p, i));
        // Each weight equals the cost of the one-resource deviation when the
        // strategy is a single resource.
        if (g.space(i).is_singleton_space()) {
          for (const auto& alt : ref.strategies[i]) {
            Profile q = p;
            q[i] = alt;
            ASSERT_EQ(w[alt.front()], ref.cost(q, i));
          }
        }
      }
      ASSERT_EQ(is_pure_nash(g, p), ref.stable(p)) << "seed " << seed;
    }
  }
}

TEST_P(RandomGames, DisplacementIsMonotone) {
  // Adding a player to a resource never lowers anyone's delay there.
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    GeneratorParams params;
    params.players = 3;
    params.resources = 3;
    params.space = GetParam();
    const Game g = instance_game(generate_instance(params, seed));
    const testing::Reference ref = testing::reference_of(g);
    for (const Profile& p : ref.all_profiles()) {
      State partial = State::from_profile(p);
      partial.remove(2);
      for (int i = 0; i < 2; ++i) {
        EXPECT_LE(player_cost(g, partial, i), player_cost(g, p, i));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Spaces, RandomGames,
                         ::testing::Values(SpaceKind::kSingleton, SpaceKind::kExplicit,
                                           SpaceKind::kUniform, SpaceKind::kPartition,
                                           SpaceKind::kGraphic));

}  // namespace
}  // namespace pcg
