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

#ifndef PCG_MARKETS_HPP_
#define PCG_MARKETS_HPP_

#include <string>
#include <vector>

#include "pcg/congestion.hpp"
#include "pcg/ext_cost.hpp"
#include "pcg/model.hpp"

namespace pcg {

/// Trivariate market delay d_e(c, x, y), tabulated per cost level.
///
/// `levels` are the distinct cost values c_{i,e} at this resource in
/// ascending order; `tables[k]` answers d_e(levels[k], x, y).
struct MarketDelay {
  std::vector<Rational> levels;
  std::vector<TableDelay> tables;

  /// Throws Error(kInvalidArgument) when c is not one of the levels.
  ExtCost evaluate(const Rational& c, int x, int y) const;
  /// 1-based dense rank of c among the levels.
  int rank_of(const Rational& c) const;

  friend bool operator==(const MarketDelay&, const MarketDelay&) = default;
};

/// Checks monotonicity in c, x and y plus d(c, x, y) <= d(c, x+y-1, 1).
std::vector<Diagnostic> validate_market_delay(const MarketDelay& d);

struct MarketSpec {
  int num_players = 0;
  std::vector<std::string> resources;
  std::vector<StrategySpace> strategy_spaces;
  /// costs[player][resource] = c_{i,e} >= 0.
  std::vector<std::vector<Rational>> costs;
  std::vector<MarketDelay> delays;
};

/// Validated generalized correlated two-sided market with ties.
class MarketGame {
 public:
  int num_players() const { return spec_.num_players; }
  int num_resources() const { return static_cast<int>(spec_.resources.size()); }
  const std::string& resource_name(ResourceId e) const {
    return spec_.resources[e];
  }
  const StrategySpace& space(PlayerId i) const {
    return spec_.strategy_spaces[i];
  }
  const Rational& cost(PlayerId i, ResourceId e) const {
    return spec_.costs[i][e];
  }
  const MarketDelay& delay(ResourceId e) const { return spec_.delays[e]; }
  bool all_singleton() const;
  const MarketSpec& spec() const { return spec_; }

 private:
  friend MarketGame build_market(MarketSpec spec);
  explicit MarketGame(MarketSpec spec) : spec_(std::move(spec)) {}
  MarketSpec spec_;
};

std::vector<Diagnostic> check_market(const MarketSpec& spec);
/// Throws Error(kValidationFailed) with every diagnostic.
MarketGame build_market(MarketSpec spec);

/// The distinct cost values at each resource, ascending.
std::vector<std::vector<Rational>> market_cost_levels(
    const std::vector<std::vector<Rational>>& costs, int num_resources);

/// Sum over the strategy of d_e(c_{i,e}, n_e^{<c_{i,e}}, n_e^{c_{i,e}}),
/// where the counts compare co-users' costs at e with c_{i,e}.
ExtCost market_player_cost(const MarketGame& market, const Profile& profile,
                           PlayerId i);

/// Classic congestion game, optionally with the all-or-nothing priorities:
/// only the most prioritized users of a resource pay d_e(count), the rest pay
/// +infinity.
struct ClassicGame {
  int num_players = 0;
  std::vector<std::string> resources;
  std::vector<StrategySpace> strategy_spaces;
  PriorityFunction priorities;  // constant 1 when the instance has none
  std::vector<std::vector<ExtCost>> delays;  // delays[e][y - 1]
};

/// Cost under the direct semantics: min-priority users of e pay
/// d_e(n_e^{p*}), everyone else on e pays +infinity.
ExtCost classic_player_cost(const ClassicGame& game, const Profile& profile,
                            PlayerId i);

/// Consistent-priority affine game: a user of e pays
/// alpha_e * (n^{<p(i)} + (n^{p(i)} + 1) / 2) + beta_e.
struct AffineGame {
  int num_players = 0;
  std::vector<std::string> resources;
  std::vector<StrategySpace> strategy_spaces;
  std::vector<int> priority;  // one value per player
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

ExtCost affine_player_cost(const AffineGame& game, const Profile& profile,
                           PlayerId i);

/// Wraps each univariate delay as d'(x, y) = inf if x >= 1 else d(y).
/// Throws Error(kNonMonotoneDelay) if some d is decreasing.
Game reduce_classic_to_priority(const ClassicGame& classic);

/// AffineDelay per resource with the shared priority map.
Game reduce_affine_to_priority(const AffineGame& affine);

/// c_{i,e} = p_e(i), d'_e(c, x, y) = d_e(x, y). Throws
/// Error(kPlayerSpecificInput) for player-specific games.
MarketGame reduce_priority_to_market(const Game& game);

/// p_e(i) = dense rank of c_{i,e} at e, d'_{i,e}(x, y) = d_e(c_{i,e}, x, y).
Game reduce_market_to_playerspecific(const MarketGame& market);

}  // namespace pcg

#endif  // PCG_MARKETS_HPP_
