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

#ifndef PCG_MODEL_HPP_
#define PCG_MODEL_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/ext_cost.hpp"
#include "pcg/matroid.hpp"

namespace pcg {

/// Bivariate delay table d(x, y) for x >= 0, y >= 1, x + y <= bound.
///
/// x counts co-users strictly more prioritized than the player, y counts
/// co-users of equal priority including the player.
class TableDelay {
 public:
  explicit TableDelay(int bound);

  /// Tabulates fn over the whole domain.
  static TableDelay from_function(int bound,
                                  const std::function<ExtCost(int, int)>& fn);

  int bound() const { return bound_; }
  bool in_domain(int x, int y) const {
    return x >= 0 && y >= 1 && x + y <= bound_;
  }
  void set(int x, int y, ExtCost value);
  bool has(int x, int y) const;
  /// Throws Error(kOutOfBound) outside the domain or on a missing cell.
  const ExtCost& at(int x, int y) const;
  /// In-domain (x, y) cells that were never set.
  std::vector<std::pair<int, int>> missing() const;

  friend bool operator==(const TableDelay&, const TableDelay&) = default;

 private:
  size_t index(int x, int y) const;

  int bound_;
  std::vector<std::optional<ExtCost>> cells_;
};

/// alpha * (x + (y + 1) / 2) + beta.
struct AffineDelay {
  Rational alpha = 0;
  Rational beta = 0;
  friend bool operator==(const AffineDelay&, const AffineDelay&) = default;
};

/// Embeds a univariate delay: +inf when x >= 1, values[y - 1] when x = 0.
struct ClassicDelay {
  std::vector<ExtCost> values;
  friend bool operator==(const ClassicDelay&, const ClassicDelay&) = default;
};

class DelaySpec {
 public:
  using Variant = std::variant<TableDelay, AffineDelay, ClassicDelay>;

  DelaySpec(TableDelay t) : impl_(std::move(t)) {}    // NOLINT
  DelaySpec(AffineDelay a) : impl_(std::move(a)) {}   // NOLINT
  DelaySpec(ClassicDelay c) : impl_(std::move(c)) {}  // NOLINT

  const Variant& variant() const { return impl_; }
  /// Largest x + y the spec can answer; nullopt when unbounded.
  std::optional<int> bound() const;

  friend bool operator==(const DelaySpec&, const DelaySpec&) = default;

 private:
  Variant impl_;
};

/// Throws Error(kOutOfBound) when (x, y) lies outside the spec's domain and
/// Error(kInvalidArgument) for y < 1 or x < 0.
ExtCost evaluate_delay(const DelaySpec& d, int x, int y);

enum class DelayAxiom { kMonotoneX, kMonotoneY, kReplacement };

std::string_view axiom_name(DelayAxiom axiom);

/// d(x, y) > d(x2, y2) although the axiom requires <=.
struct DelayViolation {
  DelayAxiom axiom;
  int x, y;
  int x2, y2;
  ExtCost lhs, rhs;

  std::string describe() const;
};

/// Checks the three delay axioms at every (x, y) with x + y <= bound:
///   d(x, y) <= d(x + 1, y), d(x, y) <= d(x, y + 1), d(x, y) <= d(x+y-1, 1).
/// Adjacent comparisons suffice by transitivity.
std::vector<DelayViolation> validate_delay_properties(const DelaySpec& d,
                                                      int bound);

/// Per-resource priority maps p_e : players -> positive integers. Smaller
/// values are more prioritized. Values need not be contiguous.
class PriorityFunction {
 public:
  PriorityFunction() = default;
  /// One shared map replicated across `num_resources` resources.
  static PriorityFunction consistent(std::vector<int> per_player,
                                     int num_resources);
  static PriorityFunction per_resource(std::vector<std::vector<int>> rows);

  int at(ResourceId e, PlayerId i) const { return rows_[e][i]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// True when the instance declared one shared map.
  bool declared_consistent() const { return declared_consistent_; }
  /// True when every resource's map is identical.
  bool is_consistent() const;

  friend bool operator==(const PriorityFunction&,
                         const PriorityFunction&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  bool declared_consistent_ = false;
};

/// Unvalidated game description. `delays` holds one spec per resource;
/// player-specific games instead fill `player_delays[player][resource]`.
struct GameSpec {
  int num_players = 0;
  std::vector<std::string> resources;
  std::vector<StrategySpace> strategy_spaces;
  PriorityFunction priorities;
  std::vector<DelaySpec> delays;
  std::vector<std::vector<DelaySpec>> player_delays;
  bool player_specific = false;
};

/// A validated, immutable priority-based congestion game.
class Game {
 public:
  int num_players() const { return spec_.num_players; }
  int num_resources() const { return static_cast<int>(spec_.resources.size()); }
  const std::string& resource_name(ResourceId e) const {
    return spec_.resources[e];
  }
  std::optional<ResourceId> find_resource(std::string_view name) const;

  const StrategySpace& space(PlayerId i) const {
    return spec_.strategy_spaces[i];
  }
  int priority(ResourceId e, PlayerId i) const {
    return spec_.priorities.at(e, i);
  }
  const PriorityFunction& priorities() const { return spec_.priorities; }
  bool player_specific() const { return spec_.player_specific; }
  /// d_{i,e}; the per-resource spec for non-player-specific games.
  const DelaySpec& delay(PlayerId i, ResourceId e) const {
    return spec_.player_specific ? spec_.player_delays[i][e] : spec_.delays[e];
  }
  ExtCost eval(PlayerId i, ResourceId e, int x, int y) const {
    return evaluate_delay(delay(i, e), x, y);
  }
  /// Every player's space has only one-element strategies.
  bool all_singleton() const;

  const GameSpec& spec() const { return spec_; }

 private:
  friend Game build_game(GameSpec spec);
  explicit Game(GameSpec spec) : spec_(std::move(spec)) {}

  GameSpec spec_;
};

/// All violations found in `spec`; empty means build_game will succeed.
std::vector<Diagnostic> check_game(const GameSpec& spec);

/// Validates and freezes a game. Throws Error(kValidationFailed) carrying
/// every diagnostic from check_game.
Game build_game(GameSpec spec);

}  // namespace pcg

#endif  // PCG_MODEL_HPP_
