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

#ifndef PCG_POTENTIALS_HPP_
#define PCG_POTENTIALS_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcg/congestion.hpp"
#include "pcg/ext_cost.hpp"
#include "pcg/markets.hpp"
#include "pcg/model.hpp"

namespace pcg {

/// (delay, level) entry of a lexicographic potential; cost decides first.
struct LexPair {
  ExtCost cost;
  int level = 1;

  friend bool operator==(const LexPair&, const LexPair&) = default;
  friend std::strong_ordering operator<=>(const LexPair& a, const LexPair& b) {
    if (auto c = a.cost <=> b.cost; c != 0) return c;
    return a.level <=> b.level;
  }
};

/// Sorted nondecreasing.
using LexVector = std::vector<LexPair>;

/// Per-resource level-count rows (sorted) plus the summed tolerances.
struct InsertionPotential {
  std::vector<std::vector<int>> phi;
  long tol_sum = 0;

  friend bool operator==(const InsertionPotential&,
                         const InsertionPotential&) = default;
};

using PotentialValue = std::variant<ExtCost, LexVector, InsertionPotential>;

/// One pair per (player, used resource): at each resource the present levels
/// q_1 < ... < q_k contribute (d_e(n_e^{<q}, y), q) for y = 1..n_e^q. Works
/// for any strategy spaces; requires a non-player-specific game. Throws
/// Error(kInvariantViolated) if a resource block is not nondecreasing.
LexVector lex_potential(const Game& game, const Profile& profile);

/// Same, restricted to singleton games. Throws Error(kNotSingleton).
LexVector lex_potential_singleton(const Game& game, const Profile& profile);

/// Throws Error(kLengthMismatch) on different lengths.
std::strong_ordering lex_compare(const LexVector& a, const LexVector& b);

/// Sum over e of d_e(n_e(outer), 1) + ... + d_e(n_e(outer), n_e(inner)).
/// `outer` may only cover players above level q and `inner` only players at
/// level q; otherwise Error(kLevelMismatch). Needs consistent priorities and
/// shared delays.
ExtCost level_potential(const Game& game, const State& outer, int q,
                        const State& inner);

/// Splits `state` into the players above level q and those at level q.
std::pair<State, State> split_at_level(const Game& game, const State& state,
                                       int q);

/// Market version of the singleton lexicographic potential; the level slot
/// holds the dense rank of the cost value at the resource.
LexVector market_lex_potential(const MarketGame& market, const Profile& profile);

/// Largest y in [1, n - x] with d_{i,e}(x, y) no worse than every
/// alternative resource joined as a newcomer, where e is the player's current
/// resource and x = n_e^{<p_e(i)}. Zero when even y = 1 is worse than some
/// alternative. Singleton games only.
int tolerance(const Game& game, const State& state, PlayerId i);

InsertionPotential insertion_potential(const Game& game, const State& state);

/// Rows first (sequence order), then tol_sum. Throws Error(kShapeMismatch)
/// when the row shapes differ.
std::strong_ordering insertion_potential_compare(const InsertionPotential& a,
                                                 const InsertionPotential& b);

/// "scalar:3/1", "lex:(1/1@1)(3/1@2)", "ins:[0 1|1 0]#4".
std::string potential_to_string(const PotentialValue& value);
/// Inverse of potential_to_string. Throws Error(kParseError).
PotentialValue parse_potential(std::string_view text);

}  // namespace pcg

#endif  // PCG_POTENTIALS_HPP_
