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

#include "pcg/dynamics.hpp"
#include "pcg/generator.hpp"
#include "pcg/io.hpp"
#include "pcg/markets.hpp"
#include "pcg/oracle.hpp"
#include "test_support.hpp"

namespace pcg {
namespace {

using testing::rs;
using testing::table;

constexpr ResourceId a = 0, b = 1;

// Equal priorities on e; player 1 prefers e alone (1) but dislikes sharing
// it (5) more than its alternative f (2). Player 2 only wants e.
Game case_b1_game() {
  GameSpec spec;
  spec.num_players = 2;
  spec.resources = {"e", "f"};
  spec.strategy_spaces = {StrategySpace::singleton({0, 1}),
                          StrategySpace::singleton({0, 1})};
  spec.priorities = PriorityFunction::consistent({1, 1}, 2);
  spec.player_specific = true;
  const TableDelay p1e = table(2, [](int x, int y) { return x == 0 && y == 1 ? 1 : 5; });
  const TableDelay p1f = table(2, [](int, int) { return 2; });
  const TableDelay p2e = table(2, [](int x, int y) { return x + y; });
  const TableDelay p2f = table(2, [](int, int) { return 10; });
  spec.player_delays = {{p1e, p1f}, {p2e, p2f}};
  spec.delays = {p2e, p2f};
  return build_game(spec);
}

std::vector<Profile> oracle_equilibria(const Game& g) {
  return testing::reference_of(g).equilibria();
}

bool member(const std::vector<Profile>& set, const Profile& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

TEST(Dynamics, RoundRobinOnT1) {
  const Game g = testing::t1();
  const SolveResult r = run_dynamics(g, {rs({a}), rs({a})}, Policy::kRoundRobin, 100);
  EXPECT_EQ(r.trace.status, RunStatus::kConverged);
  EXPECT_EQ(r.profile, (Profile{rs({a}), rs({b})}));
  const StepStats stats = count_steps(r.trace);
  EXPECT_EQ(stats.total, 1);
  EXPECT_EQ(stats.moves, 1);
  EXPECT_EQ(r.trace.steps.back().player, 1);
  EXPECT_TRUE(certify_trace(g, r.trace).clean());
}

TEST(Dynamics, StartAtEquilibriumTakesNoSteps) {
  const Game g = testing::t1();
  const SolveResult r = run_dynamics(g, {rs({b}), rs({a})}, Policy::kBestImprover, 100);
  EXPECT_EQ(r.trace.status, RunStatus::kConverged);
  EXPECT_EQ(count_steps(r.trace).total, 0);
}

TEST(Dynamics, ZeroCapStopsImmediately) {
  const Game g = testing::t1();
  const SolveResult r = run_dynamics(g, {rs({a}), rs({a})}, Policy::kFirstImprover, 0);
  EXPECT_EQ(r.trace.status, RunStatus::kCapReached);
  EXPECT_EQ(count_steps(r.trace).total, 0);
  EXPECT_EQ(r.profile, (Profile{rs({a}), rs({a})}));
}

TEST(Dynamics, BestResponseKeepsOptimalStrategy) {
  const Game g = testing::t1();
  EXPECT_EQ(best_response(g, {rs({a}), rs({a})}, 1), rs({b}));
  EXPECT_EQ(best_response(g, {rs({a}), rs({b})}, 1), rs({b}));
  EXPECT_EQ(best_response(g, {rs({b}), rs({a})}, 0), rs({b}));
}

TEST(Dynamics, ConvergedRunsEndAtEquilibria) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorParams params;
    params.players = 3;
    params.resources = 4;
    params.levels = 2;
    params.space = static_cast<SpaceKind>(seed % 5);
    params.consistent = seed % 2 == 0;
    const Game g = instance_game(generate_instance(params, seed));
    Profile start;
    for (int i = 0; i < g.num_players(); ++i) start.push_back(g.space(i).all_bases().back());
    for (Policy policy : {Policy::kRoundRobin, Policy::kFirstImprover, Policy::kBestImprover}) {
      const SolveResult r = run_dynamics(g, start, policy, 10000);
      if (r.trace.status != RunStatus::kConverged) continue;
      EXPECT_TRUE(testing::reference_of(g).stable(r.profile)) << "seed " << seed;
      const CertifyReport report = certify_trace(g, r.trace);
      EXPECT_TRUE(report.clean()) << "seed " << seed << ": "
                                  << (report.violations.empty() ? ""
                                                                : report.violations[0].message);
    }
  }
}

TEST(Dynamics, MatroidMovesAreSingleSwaps) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorParams params;
    params.players = 3;
    params.resources = 5;
    params.space = SpaceKind::kUniform;
    params.max_rank = 3;
    const Game g = instance_game(generate_instance(params, seed));
    Profile start;
    for (int i = 0; i < g.num_players(); ++i) start.push_back(g.space(i).all_bases().back());
    const SolveResult r = run_dynamics(g, start, Policy::kRoundRobin, 10000);
    for (const Step& s : r.trace.steps) {
      if (s.step == 0) continue;
      ResourceSet diff;
      std::set_difference(s.to->begin(), s.to->end(), s.from->begin(), s.from->end(),
                          std::back_inserter(diff));
      EXPECT_EQ(diff.size(), 1U);
      EXPECT_LT(*s.cost_after, *s.cost_before);
    }
  }
}

TEST(Layered, T1Consistent) {
  const Game g = testing::t1(true);
  const SolveResult r = solve_consistent_layered(g);
  EXPECT_EQ(r.profile, (Profile{rs({a}), rs({b})}));
  const StepStats stats = count_steps(r.trace);
  EXPECT_EQ(stats.total, 2);
  EXPECT_EQ(stats.placements, 2);
  EXPECT_EQ(stats.discards, 0);
  EXPECT_TRUE(member(oracle_equilibria(g), r.profile));
  EXPECT_TRUE(certify_trace(g, r.trace).clean());
}

TEST(Layered, RejectsInconsistentPriorities) {
  try {
    (void)solve_consistent_layered(testing::t1());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentPriorities);
  }
}

TEST(Layered, AffineTwoLayers) {
  AffineGame affine;
  affine.num_players = 3;
  affine.resources = {"a", "b"};
  affine.strategy_spaces.assign(3, StrategySpace::singleton({0, 1}));
  affine.priority = {1, 2, 2};
  affine.alpha = {Rational(2), Rational(3)};
  affine.beta = {Rational(1), Rational(0)};
  const Game g = reduce_affine_to_priority(affine);
  const SolveResult r = solve_consistent_layered(g);
  EXPECT_TRUE(member(oracle_equilibria(g), r.profile));
  const CertifyReport report = certify_trace(g, r.trace);
  EXPECT_TRUE(report.clean());
  EXPECT_TRUE(report.final_pne);
}

TEST(Layered, SingleLayerIsPlainDescent) {
  GeneratorParams params;
  params.players = 4;
  params.resources = 3;
  params.levels = 1;
  params.consistent = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Game g = instance_game(generate_instance(params, seed));
    const SolveResult r = solve_consistent_layered(g);
    EXPECT_TRUE(member(oracle_equilibria(g), r.profile));
  }
}

TEST(Layered, RandomSpacesAgainstOracle) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    GeneratorParams params;
    params.players = 3;
    params.resources = 4;
    params.levels = 2 + static_cast<int>(seed % 2);
    params.consistent = true;
    params.space = static_cast<SpaceKind>(seed % 7);
    params.player_specific = seed % 4 == 0 && params.space == SpaceKind::kSingleton;
    const Game g = instance_game(generate_instance(params, seed));
    const SolveResult r = solve_consistent_layered(g);
    EXPECT_TRUE(member(oracle_equilibria(g), r.profile)) << "seed " << seed;
    const CertifyReport report = certify_trace(g, r.trace);
    EXPECT_TRUE(report.clean()) << "seed " << seed << ": "
                                << (report.violations.empty() ? ""
                                                              : report.violations[0].message);
  }
}

TEST(Insertion, T1HandSimulation) {
  const Game g = testing::t1();
  const SolveResult r = solve_insertion(g);
  EXPECT_EQ(r.profile, (Profile{rs({a}), rs({b})}));
  ASSERT_EQ(r.trace.steps.size(), 2U);
  EXPECT_EQ(r.trace.steps[0].to, rs({a}));
  EXPECT_EQ(r.trace.steps[1].to, rs({b}));
  EXPECT_EQ(r.counters.at("case_a"), 2);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_TRUE(member(oracle_equilibria(g), r.profile));
  EXPECT_TRUE(certify_trace(g, r.trace).clean());
}

TEST(Insertion, SinglePlayer) {
  GameSpec spec;
  spec.num_players = 1;
  spec.resources = {"a", "b"};
  spec.strategy_spaces = {StrategySpace::singleton({0, 1})};
  spec.priorities = PriorityFunction::consistent({1}, 2);
  spec.delays = {table(1, [](int, int) { return 2; }), table(1, [](int, int) { return 1; })};
  const SolveResult r = solve_insertion(build_game(spec));
  EXPECT_EQ(r.profile, (Profile{rs({1})}));
  EXPECT_EQ(r.counters.at("case_a"), 1);
  EXPECT_EQ(count_steps(r.trace).insertions, 1);
}

TEST(Insertion, CaseB1DiscardsAndReinserts) {
  const Game g = case_b1_game();
  const SolveResult r = solve_insertion(g);
  EXPECT_EQ(r.counters.at("case_b1"), 1);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.profile, (Profile{rs({1}), rs({0})}));
  const StepStats stats = count_steps(r.trace);
  EXPECT_EQ(stats.discards, 1);
  EXPECT_EQ(stats.insertions, 3);
  EXPECT_TRUE(member(oracle_equilibria(g), r.profile));
  EXPECT_TRUE(certify_trace(g, r.trace).clean());
}

TEST(Insertion, RandomPlayerSpecificAgainstOracle) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GeneratorParams params;
    params.players = 2 + static_cast<int>(seed % 4);
    params.resources = 2 + static_cast<int>(seed % 3);
    params.levels = 3;
    params.player_specific = true;
    const Game g = instance_game(generate_instance(params, seed));
    const SolveResult r = solve_insertion(g);
    ASSERT_EQ(r.trace.status, RunStatus::kConverged);
    EXPECT_TRUE(member(oracle_equilibria(g), r.profile)) << "seed " << seed;
    EXPECT_TRUE(certify_trace(g, r.trace).final_pne);
  }
}

// Generated game where discarding two lower-priority users of a resource
// opens it up for an outsider at their level, so the plain rounds stop
// at a profile that is not an equilibrium.
Game discard_gap_game() {
  GeneratorParams params;
  params.players = 7;
  params.resources = 3;
  params.levels = 4;
  params.player_specific = true;
  return instance_game(generate_instance(params, 3263));
}

TEST(Insertion, DiscardGapIsReported) {
  const Game g = discard_gap_game();
  InsertionOptions options;
  options.check_invariants = true;
  const SolveResult r = solve_insertion(g, options);
  ASSERT_EQ(r.trace.status, RunStatus::kConverged);
  EXPECT_FALSE(is_pure_nash(g, r.profile));
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics.front().find("no-incentive"), std::string::npos);
  EXPECT_FALSE(certify_trace(g, r.trace).final_pne);
}

TEST(Insertion, RepairReachesEquilibrium) {
  const Game g = discard_gap_game();
  InsertionOptions options;
  options.repair = true;
  const SolveResult r = solve_insertion(g, options);
  ASSERT_EQ(r.trace.status, RunStatus::kConverged);
  EXPECT_GT(r.counters.at("repairs"), 0);
  EXPECT_TRUE(member(oracle_equilibria(g), r.profile));
  EXPECT_TRUE(certify_trace(g, r.trace).final_pne);
}

TEST(Insertion, RepairIsIdleOnT1) {
  const Game g = testing::t1();
  InsertionOptions options;
  options.repair = true;
  const SolveResult plain = solve_insertion(g);
  const SolveResult repaired = solve_insertion(g, options);
  EXPECT_EQ(plain.profile, repaired.profile);
  EXPECT_EQ(plain.trace.steps.size(), repaired.trace.steps.size());
}

TEST(Insertion, RejectsNonSingleton) {
  GameSpec spec = testing::t1_spec();
  spec.strategy_spaces[0] = StrategySpace::uniform({0, 1}, 2);
  try {
    (void)solve_insertion(build_game(spec));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSingleton);
  }
}

TEST(StepCount, EmptyTraceIsZero) {
  const StepStats stats = count_steps(MoveTrace{});
  EXPECT_EQ(stats.total, 0);
  EXPECT_EQ(stats.placements + stats.moves + stats.insertions + stats.discards, 0);
}

}  // namespace
}  // namespace pcg
