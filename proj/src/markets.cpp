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

#include "pcg/markets.hpp"

#include <algorithm>
#include <string>

namespace pcg {

namespace {

std::string pt3(int k, int x, int y) {
  return "(level " + std::to_string(k + 1) + ", x=" + std::to_string(x) +
         ", y=" + std::to_string(y) + ")";
}

}  // namespace

int MarketDelay::rank_of(const Rational& c) const {
  auto it = std::lower_bound(levels.begin(), levels.end(), c);
  if (it == levels.end() || *it != c) {
    throw Error(ErrorCode::kInvalidArgument,
                "cost " + rational_to_string(c) + " is not a level here");
  }
  return static_cast<int>(it - levels.begin()) + 1;
}

ExtCost MarketDelay::evaluate(const Rational& c, int x, int y) const {
  return tables.at(rank_of(c) - 1).at(x, y);
}

std::vector<Diagnostic> validate_market_delay(const MarketDelay& d) {
  std::vector<Diagnostic> out;
  if (d.tables.size() != d.levels.size()) {
    out.push_back({"", "expected one table per cost level (" +
                           std::to_string(d.levels.size()) + "), got " +
                           std::to_string(d.tables.size())});
    return out;
  }
  for (size_t k = 0; k < d.tables.size(); ++k) {
    for (auto [x, y] : d.tables[k].missing()) {
      out.push_back({"", "missing table entry " + pt3(static_cast<int>(k), x, y)});
    }
  }
  if (!out.empty()) return out;
  for (size_t k = 0; k < d.tables.size(); ++k) {
    const TableDelay& t = d.tables[k];
    for (const auto& v : validate_delay_properties(DelaySpec(t), t.bound())) {
      out.push_back({"", "level " + std::to_string(k + 1) + ": " + v.describe()});
    }
    if (k + 1 < d.tables.size()) {
      const TableDelay& next = d.tables[k + 1];
      const int bound = std::min(t.bound(), next.bound());
      for (int s = 1; s <= bound; ++s) {
        for (int x = 0; x < s; ++x) {
          if (t.at(x, s - x) > next.at(x, s - x)) {
            out.push_back({"", "monotone-c violated at " +
                                   pt3(static_cast<int>(k), x, s - x)});
          }
        }
      }
    }
  }
  return out;
}

bool MarketGame::all_singleton() const {
  return std::all_of(spec_.strategy_spaces.begin(),
                     spec_.strategy_spaces.end(),
                     [](const StrategySpace& s) {
                       return s.is_singleton_space();
                     });
}

std::vector<std::vector<Rational>> market_cost_levels(
    const std::vector<std::vector<Rational>>& costs, int num_resources) {
  std::vector<std::vector<Rational>> levels(num_resources);
  for (const auto& row : costs) {
    for (int e = 0; e < num_resources && e < static_cast<int>(row.size()); ++e) {
      levels[e].push_back(row[e]);
    }
  }
  for (auto& l : levels) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return levels;
}

std::vector<Diagnostic> check_market(const MarketSpec& spec) {
  std::vector<Diagnostic> out;
  const int n = spec.num_players;
  const int m = static_cast<int>(spec.resources.size());
  if (n < 1) out.push_back({"players", "a market needs at least one player"});
  if (m < 1) out.push_back({"resources", "a market needs at least one resource"});
  if (static_cast<int>(spec.strategy_spaces.size()) != n) {
    out.push_back({"strategies", "expected one strategy space per player"});
  } else {
    for (int i = 0; i < n; ++i) {
      for (const auto& d : spec.strategy_spaces[i].validate()) {
        out.push_back({"strategies[" + std::to_string(i + 1) + "]", d.message});
      }
      for (ResourceId e : spec.strategy_spaces[i].ground()) {
        if (e < 0 || e >= m) {
          out.push_back({"strategies[" + std::to_string(i + 1) + "]",
                         "unknown resource index " + std::to_string(e)});
        }
      }
    }
  }
  bool costs_ok = static_cast<int>(spec.costs.size()) == n;
  for (const auto& row : spec.costs) {
    costs_ok = costs_ok && static_cast<int>(row.size()) == m;
    for (const auto& c : row) {
      if (sgn(c) < 0) out.push_back({"costs", "costs must be nonnegative"});
    }
  }
  if (!costs_ok) {
    out.push_back({"costs", "missing cost entry: need one per (player, resource)"});
    return out;
  }
  if (static_cast<int>(spec.delays.size()) != m) {
    out.push_back({"market_delays", "expected one delay per resource"});
    return out;
  }
  const auto levels = market_cost_levels(spec.costs, m);
  for (int e = 0; e < m; ++e) {
    const std::string where = "market_delays." + spec.resources[e];
    const MarketDelay& d = spec.delays[e];
    if (d.levels != levels[e]) {
      out.push_back({where, "delay levels do not match the distinct costs"});
      continue;
    }
    for (const auto& t : d.tables) {
      if (t.bound() < n) {
        out.push_back({where, "delay bound " + std::to_string(t.bound()) +
                                  " is smaller than the required " +
                                  std::to_string(n)});
      }
    }
    for (auto& diag : validate_market_delay(d)) {
      out.push_back({where, std::move(diag.message)});
    }
  }
  return out;
}

MarketGame build_market(MarketSpec spec) {
  auto diagnostics = check_market(spec);
  if (!diagnostics.empty()) {
    std::string msg = "market validation failed: " + diagnostics.front().where +
                      ": " + diagnostics.front().message;
    throw Error(ErrorCode::kValidationFailed, std::move(msg),
                std::move(diagnostics));
  }
  return MarketGame(std::move(spec));
}

ExtCost market_player_cost(const MarketGame& market, const Profile& profile,
                           PlayerId i) {
  ExtCost total;
  for (ResourceId e : profile.at(i)) {
    const Rational& c = market.cost(i, e);
    int x = 0;
    int y = 0;
    for (int j = 0; j < market.num_players(); ++j) {
      if (!contains(profile[j], e)) continue;
      const int order = cmp(market.cost(j, e), c);
      if (order < 0) {
        ++x;
      } else if (order == 0) {
        ++y;
      }
    }
    total += market.delay(e).evaluate(c, x, y);
  }
  return total;
}

ExtCost classic_player_cost(const ClassicGame& game, const Profile& profile,
                            PlayerId i) {
  ExtCost total;
  for (ResourceId e : profile.at(i)) {
    int best = game.priorities.at(e, i);
    for (int j = 0; j < game.num_players; ++j) {
      if (contains(profile[j], e)) best = std::min(best, game.priorities.at(e, j));
    }
    if (game.priorities.at(e, i) > best) {
      total += ExtCost::infinity();
      continue;
    }
    int count = 0;
    for (int j = 0; j < game.num_players; ++j) {
      if (contains(profile[j], e) && game.priorities.at(e, j) == best) ++count;
    }
    total += game.delays.at(e).at(count - 1);
  }
  return total;
}

ExtCost affine_player_cost(const AffineGame& game, const Profile& profile,
                           PlayerId i) {
  Rational total = 0;
  const int q = game.priority.at(i);
  for (ResourceId e : profile.at(i)) {
    int above = 0;
    int same = 0;
    for (int j = 0; j < game.num_players; ++j) {
      if (!contains(profile[j], e)) continue;
      if (game.priority[j] < q) ++above;
      if (game.priority[j] == q) ++same;
    }
    total += game.alpha[e] * (Rational(above) + make_rational(same + 1, 2)) +
             game.beta[e];
  }
  return ExtCost(total);
}

Game reduce_classic_to_priority(const ClassicGame& classic) {
  GameSpec spec;
  spec.num_players = classic.num_players;
  spec.resources = classic.resources;
  spec.strategy_spaces = classic.strategy_spaces;
  spec.priorities = classic.priorities;
  for (size_t e = 0; e < classic.delays.size(); ++e) {
    const auto& values = classic.delays[e];
    for (size_t y = 1; y < values.size(); ++y) {
      if (values[y] < values[y - 1]) {
        throw Error(ErrorCode::kNonMonotoneDelay,
                    "delay of resource " + classic.resources.at(e) +
                        " decreases at y=" + std::to_string(y + 1));
      }
    }
    spec.delays.push_back(ClassicDelay{values});
  }
  return build_game(std::move(spec));
}

Game reduce_affine_to_priority(const AffineGame& affine) {
  GameSpec spec;
  spec.num_players = affine.num_players;
  spec.resources = affine.resources;
  spec.strategy_spaces = affine.strategy_spaces;
  spec.priorities = PriorityFunction::consistent(
      affine.priority, static_cast<int>(affine.resources.size()));
  for (size_t e = 0; e < affine.resources.size(); ++e) {
    spec.delays.push_back(AffineDelay{affine.alpha.at(e), affine.beta.at(e)});
  }
  return build_game(std::move(spec));
}

MarketGame reduce_priority_to_market(const Game& game) {
  if (game.player_specific()) {
    throw Error(ErrorCode::kPlayerSpecificInput,
                "only non-player-specific games embed as markets");
  }
  const int n = game.num_players();
  const int m = game.num_resources();
  MarketSpec spec;
  spec.num_players = n;
  spec.resources = game.spec().resources;
  spec.strategy_spaces = game.spec().strategy_spaces;
  spec.costs.assign(n, std::vector<Rational>(m));
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < m; ++e) spec.costs[i][e] = game.priority(e, i);
  }
  const auto levels = market_cost_levels(spec.costs, m);
  for (int e = 0; e < m; ++e) {
    MarketDelay d;
    d.levels = levels[e];
    const DelaySpec& source = game.delay(0, e);
    const int bound = std::max(n, 1);
    TableDelay t = TableDelay::from_function(
        bound, [&](int x, int y) { return evaluate_delay(source, x, y); });
    d.tables.assign(d.levels.size(), t);
    spec.delays.push_back(std::move(d));
  }
  return build_market(std::move(spec));
}

Game reduce_market_to_playerspecific(const MarketGame& market) {
  const int n = market.num_players();
  const int m = market.num_resources();
  GameSpec spec;
  spec.num_players = n;
  spec.resources = market.spec().resources;
  spec.strategy_spaces = market.spec().strategy_spaces;
  spec.player_specific = true;
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  spec.player_delays.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < m; ++e) {
      const MarketDelay& d = market.delay(e);
      const int rank = d.rank_of(market.cost(i, e));
      rows[e][i] = rank;
      spec.player_delays[i].push_back(d.tables[rank - 1]);
    }
  }
  spec.priorities = PriorityFunction::per_resource(std::move(rows));
  return build_game(std::move(spec));
}

}  // namespace pcg
