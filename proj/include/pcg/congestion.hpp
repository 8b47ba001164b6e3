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

#ifndef PCG_CONGESTION_HPP_
#define PCG_CONGESTION_HPP_

#include <map>
#include <optional>
#include <vector>

#include "pcg/ext_cost.hpp"
#include "pcg/matroid.hpp"
#include "pcg/model.hpp"

namespace pcg {

/// One chosen strategy per player, indexed by player id.
using Profile = std::vector<ResourceSet>;

/// Strategies of a subset of the players. Uncovered players are absent:
/// they neither congest resources nor have a cost.
class State {
 public:
  State() = default;
  explicit State(int num_players) : slots_(num_players) {}
  static State from_profile(const Profile& profile);

  int num_players() const { return static_cast<int>(slots_.size()); }
  bool covers(PlayerId i) const { return slots_.at(i).has_value(); }
  /// Throws Error(kPlayerNotPlaced) for an uncovered player.
  const ResourceSet& strategy(PlayerId i) const;
  void place(PlayerId i, ResourceSet strategy) { slots_.at(i) = std::move(strategy); }
  void remove(PlayerId i) { slots_.at(i).reset(); }
  std::vector<PlayerId> covered() const;
  bool is_full() const;
  /// Requires is_full().
  Profile to_profile() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<std::optional<ResourceSet>> slots_;
};

/// Occupancy of one resource, split by priority level.
struct CongestionView {
  int total = 0;
  std::map<int, int> levels;  // priority value -> n_e^q, present levels only

  /// n_e^{<q}
  int below(int q) const;
  /// n_e^q
  int at(int q) const;
  /// Q_e(S), ascending.
  std::vector<int> present_levels() const;
  /// p*_e(S); nullopt stands for +infinity (empty resource).
  std::optional<int> min_priority() const;
};

CongestionView congestion_view(const Game& game, const State& state,
                               ResourceId e);

/// Sum over the player's strategy of d_{i,e}(n_e^{<p_e(i)}, n_e^{p_e(i)}).
/// Throws Error(kPlayerNotPlaced) if `state` does not cover the player.
ExtCost player_cost(const Game& game, const State& state, PlayerId i);
ExtCost player_cost(const Game& game, const Profile& profile, PlayerId i);

/// Cost with infinities counted, so that a step from two infinite resources
/// to one is visible. Consistent with player_cost whenever that is finite.
WeightKey player_cost_key(const Game& game, const State& state, PlayerId i);

/// For every resource r in the player's ground set: the delay r would impose
/// on the player if her strategy contained r, with everyone else fixed.
/// Resources outside the ground set get +infinity. The player's own
/// membership is removed before counting, so the weights describe any
/// deviation exactly: cost(T) = sum of weights over T.
Weights entry_weights(const Game& game, const State& state, PlayerId i);
Weights entry_weights(const Game& game, const Profile& profile, PlayerId i);

struct BestResponse {
  ResourceSet strategy;
  ExtCost cost;
};

/// Cost-minimizing strategy for a covered or uncovered player given the
/// other covered players. Ties keep the current strategy when it is optimal,
/// otherwise the id-lexicographically smallest optimum wins.
BestResponse compute_best_response(const Game& game, const State& state,
                                   PlayerId i);

bool is_better_response(const Game& game, const Profile& profile, PlayerId i,
                        const ResourceSet& new_strategy);

/// True iff no player has a better response. Matroid spaces are checked with
/// an exact greedy best response, explicit families by enumeration.
bool is_pure_nash(const Game& game, const Profile& profile);

/// Some covered player of `state` has a better response, given only the
/// covered players. The full-profile case coincides with !is_pure_nash.
bool some_covered_player_can_improve(const Game& game, const State& state);

}  // namespace pcg

#endif  // PCG_CONGESTION_HPP_
