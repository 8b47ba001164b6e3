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

#ifndef PCG_DYNAMICS_HPP_
#define PCG_DYNAMICS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcg/congestion.hpp"
#include "pcg/model.hpp"

namespace pcg {

/// One trace row. `from` is empty for a placement (NONE), `to` is empty for
/// a discard (DISCARDED). Costs are empty where undefined.
struct Step {
  int step = 0;  // 0 for the rows that set up a start profile
  std::string phase;
  PlayerId player = 0;
  std::optional<ResourceSet> from;
  std::optional<ResourceSet> to;
  std::optional<ExtCost> cost_before;
  std::optional<ExtCost> cost_after;
  std::string potential;  // canonical PotentialValue string, or empty

  friend bool operator==(const Step&, const Step&) = default;
};

enum class RunStatus { kConverged, kCapReached };

struct MoveTrace {
  std::vector<Step> steps;
  RunStatus status = RunStatus::kConverged;
};

struct SolveResult {
  Profile profile;
  MoveTrace trace;
  /// Violated internal invariants, one line each; empty on a clean run.
  std::vector<std::string> diagnostics;
  /// Event tallies: "case_a", "case_b1", "case_b2", "restarts".
  std::map<std::string, long> counters;
};

enum class Policy { kRoundRobin, kFirstImprover, kBestImprover };

/// Best response of a placed player (see compute_best_response).
ResourceSet best_response(const Game& game, const Profile& profile, PlayerId i);

/// Better-response dynamics from `start`. Each move takes the mover to a best
/// response; matroid moves are split into single-swap rows. `cap` bounds the
/// number of moves (not rows).
SolveResult run_dynamics(const Game& game, const Profile& start, Policy policy,
                         long cap);

struct LayeredOptions {
  /// Moves allowed per player-specific layer attempt; 0 means
  /// n^2 * m * levels.
  long layer_cap = 0;
  int restarts = 3;
};

/// Solves priority levels in ascending order with lower levels frozen.
/// Throws Error(kInconsistentPriorities) or Error(kLayerCapExhausted).
SolveResult solve_consistent_layered(const Game& game,
                                     const LayeredOptions& options = {});

struct InsertionOptions {
  long max_rounds = 1'000'000;
  /// Recompute the potential and the no-incentive invariant every round.
  bool check_invariants = true;
  /// After each round, discard and requeue every placed player that has a
  /// better response (phase "repair"). The plain rounds can leave such
  /// players behind when several lower-priority players leave a resource.
  bool repair = false;
};

/// Insertion algorithm for singleton games. Throws Error(kNotSingleton).
/// Status kCapReached if max_rounds runs out.
SolveResult solve_insertion(const Game& game, const InsertionOptions& options = {});

struct StepStats {
  long total = 0;  // rows with step >= 1
  long placements = 0;
  long moves = 0;
  long insertions = 0;
  long discards = 0;
  std::map<std::string, long> per_phase;
};

StepStats count_steps(const MoveTrace& trace);

}  // namespace pcg

#endif  // PCG_DYNAMICS_HPP_
