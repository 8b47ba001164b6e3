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

#include "pcg/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace pcg {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % n;
}

SpaceKind parse_space_kind(std::string_view name) {
  if (name == "singleton") return SpaceKind::kSingleton;
  if (name == "explicit") return SpaceKind::kExplicit;
  if (name == "uniform") return SpaceKind::kUniform;
  if (name == "partition") return SpaceKind::kPartition;
  if (name == "graphic") return SpaceKind::kGraphic;
  if (name == "bases") return SpaceKind::kBases;
  if (name == "mixed") return SpaceKind::kMixed;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown space kind '" + std::string(name) + "'");
}

namespace {

ExtCost halves(int k) { return ExtCost(make_rational(k, 2)); }

// Value in [lo, hi] on the half-integer grid; hi may be infinite.
ExtCost between(Rational lo, const ExtCost& hi, Rng& rng, int max_step) {
  lo *= 2;
  lo.canonicalize();
  const long base = lo.get_num().get_si() / lo.get_den().get_si();
  long top = base + max_step;
  if (hi.is_finite()) {
    Rational h = hi.value() * 2;
    top = std::min<long>(top, h.get_num().get_si() / h.get_den().get_si());
  }
  return halves(static_cast<int>(base + static_cast<long>(rng.below(top - base + 1))));
}

ResourceSet random_subset(Rng& rng, int m, int lo, int hi) {
  std::vector<ResourceId> all(m);
  std::iota(all.begin(), all.end(), 0);
  for (int k = m - 1; k > 0; --k) std::swap(all[k], all[rng.below(k + 1)]);
  const int size = rng.range(std::min(lo, m), std::min(hi, m));
  all.resize(size);
  return make_set(std::move(all));
}

StrategySpace random_space(Rng& rng, SpaceKind kind, int m,
                           const GeneratorParams& p) {
  if (kind == SpaceKind::kMixed) {
    static constexpr SpaceKind kinds[] = {
        SpaceKind::kSingleton, SpaceKind::kExplicit, SpaceKind::kUniform,
        SpaceKind::kPartition, SpaceKind::kGraphic,  SpaceKind::kBases};
    kind = kinds[rng.below(std::size(kinds))];
  }
  const int ground_cap = std::min(p.max_ground, m);
  switch (kind) {
    case SpaceKind::kSingleton:
      return StrategySpace::singleton(random_subset(rng, m, 2, m));
    case SpaceKind::kExplicit: {
      const int count = rng.range(1, p.max_sets);
      std::vector<ResourceSet> sets;
      for (int k = 0; k < count; ++k) {
        sets.push_back(random_subset(rng, m, 1, std::min(p.max_rank + 1, m)));
      }
      return StrategySpace::explicit_sets(std::move(sets));
    }
    case SpaceKind::kUniform: {
      ResourceSet ground = random_subset(rng, m, 1, ground_cap);
      const int g = static_cast<int>(ground.size());
      return StrategySpace::uniform(std::move(ground),
                                    rng.range(1, std::min(p.max_rank, g)));
    }
    case SpaceKind::kPartition: {
      ResourceSet ground = random_subset(rng, m, 1, ground_cap);
      const int blocks_wanted =
          rng.range(1, std::min<int>(p.max_rank, static_cast<int>(ground.size())));
      std::vector<ResourceSet> blocks(blocks_wanted);
      for (size_t k = 0; k < ground.size(); ++k) {
        const size_t b = k < blocks.size() ? k : rng.below(blocks.size());
        blocks[b].push_back(ground[k]);
      }
      std::vector<int> caps;
      int budget = p.max_rank;
      for (size_t b = 0; b < blocks.size(); ++b) {
        blocks[b] = make_set(std::move(blocks[b]));
        const int left = static_cast<int>(blocks.size() - b - 1);
        const int cap = rng.range(
            1, std::max(1, std::min<int>(static_cast<int>(blocks[b].size()),
                                         budget - left)));
        caps.push_back(cap);
        budget -= cap;
      }
      return StrategySpace::partition(std::move(blocks), std::move(caps));
    }
    case SpaceKind::kGraphic: {
      const int nodes = rng.range(2, std::min(p.max_rank, ground_cap) + 1);
      const int edges = rng.range(nodes - 1, std::max(nodes - 1, ground_cap));
      ResourceSet labels = random_subset(rng, m, edges, edges);
      for (int k = static_cast<int>(labels.size()) - 1; k > 0; --k) {
        std::swap(labels[k], labels[rng.below(k + 1)]);
      }
      std::vector<GraphEdge> out;
      for (int v = 1; v < nodes && v - 1 < static_cast<int>(labels.size()); ++v) {
        out.push_back({static_cast<int>(rng.below(v)), v, labels[v - 1]});
      }
      for (size_t k = out.size(); k < labels.size(); ++k) {
        const int u = rng.range(0, nodes - 1);
        int v = rng.range(0, nodes - 2);
        if (v >= u) ++v;
        out.push_back({u, v, labels[k]});
      }
      return StrategySpace::graphic(std::move(out));
    }
    case SpaceKind::kBases: {
      const StrategySpace inner = random_space(
          rng, rng.chance(50) ? SpaceKind::kUniform : SpaceKind::kPartition, m, p);
      return StrategySpace::explicit_bases(inner.all_bases());
    }
    case SpaceKind::kMixed:
      break;
  }
  return StrategySpace::singleton({0});
}

// `levels` distinct values from 1..2*levels, ascending: gaps are allowed.
std::vector<int> sparse_levels(Rng& rng, int levels) {
  std::vector<int> pool(2 * levels);
  std::iota(pool.begin(), pool.end(), 1);
  for (int k = static_cast<int>(pool.size()) - 1; k > 0; --k) {
    std::swap(pool[k], pool[rng.below(k + 1)]);
  }
  pool.resize(levels);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> random_priorities(Rng& rng, int n, const std::vector<int>& values) {
  std::vector<int> out(n);
  for (int& v : out) v = values[rng.below(values.size())];
  return out;
}

}  // namespace

TableDelay random_table(Rng& rng, int bound, int max_step, int infinity_percent) {
  TableDelay t(bound);
  ExtCost corner;  // d(s - 1, 1) of the previous diagonal
  for (int s = 1; s <= bound; ++s) {
    if (corner.is_finite() && s > 1 && rng.chance(infinity_percent)) {
      corner = ExtCost::infinity();
    } else if (corner.is_finite()) {
      corner = between(corner.value() + (s == 1 ? 1 : 0), ExtCost::infinity(), rng,
                       max_step);
    }
    t.set(s - 1, 1, corner);
    for (int y = 2; y <= s; ++y) {
      const int x = s - y;
      ExtCost lo = t.at(x, y - 1);
      if (x > 0) lo = std::max(lo, t.at(x - 1, y));
      if (lo.is_infinite()) {
        t.set(x, y, lo);
      } else if (corner.is_infinite() && rng.chance(infinity_percent)) {
        t.set(x, y, ExtCost::infinity());
      } else {
        t.set(x, y, between(lo.value(), corner, rng, max_step));
      }
    }
  }
  return t;
}

namespace {

TableDelay add_tables(const TableDelay& a, const TableDelay& b) {
  return TableDelay::from_function(
      a.bound(), [&](int x, int y) { return a.at(x, y) + b.at(x, y); });
}

std::vector<ExtCost> random_univariate(Rng& rng, int n, int max_step) {
  std::vector<ExtCost> out;
  ExtCost v = halves(rng.range(1, std::max(1, max_step)));
  for (int y = 1; y <= n; ++y) {
    out.push_back(v);
    v = v + halves(rng.range(0, max_step));
  }
  return out;
}

Rational small_rational(Rng& rng, int max) {
  return make_rational(rng.range(0, std::max(0, max)), rng.range(1, 3));
}

}  // namespace

Instance generate_instance(const GeneratorParams& p, std::uint64_t seed) {
  if (p.players < 1 || p.resources < 1 || p.levels < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "players, resources and levels must be positive");
  }
  Rng rng(seed);
  const int n = p.players;
  const int m = p.resources;
  std::vector<std::string> names;
  for (int e = 0; e < m; ++e) {
    std::string name(1, static_cast<char>('a' + e % 26));
    if (e >= 26) name += std::to_string(e / 26);
    names.push_back(std::move(name));
  }
  std::vector<StrategySpace> spaces;
  for (int i = 0; i < n; ++i) spaces.push_back(random_space(rng, p.space, m, p));

  const std::vector<int> values = sparse_levels(rng, p.levels);
  auto priorities = [&]() {
    if (p.consistent || p.levels == 1) {
      return PriorityFunction::consistent(random_priorities(rng, n, values), m);
    }
    std::vector<std::vector<int>> rows;
    for (int e = 0; e < m; ++e) rows.push_back(random_priorities(rng, n, values));
    return PriorityFunction::per_resource(std::move(rows));
  };

  if (p.model == "priority") {
    GameSpec spec;
    spec.num_players = n;
    spec.resources = names;
    spec.strategy_spaces = std::move(spaces);
    spec.priorities = priorities();
    spec.player_specific = p.player_specific;
    if (p.player_specific) {
      for (int i = 0; i < n; ++i) {
        std::vector<DelaySpec> row;
        for (int e = 0; e < m; ++e) {
          row.push_back(random_table(rng, n, p.max_delay, p.infinity_percent));
        }
        spec.player_delays.push_back(std::move(row));
      }
    } else {
      for (int e = 0; e < m; ++e) {
        spec.delays.push_back(random_table(rng, n, p.max_delay, p.infinity_percent));
      }
    }
    return {"priority", build_game(std::move(spec))};
  }
  if (p.model == "classic") {
    ClassicGame g;
    g.num_players = n;
    g.resources = names;
    g.strategy_spaces = std::move(spaces);
    g.priorities = priorities();
    for (int e = 0; e < m; ++e) g.delays.push_back(random_univariate(rng, n, p.max_delay));
    reduce_classic_to_priority(g);
    return {"classic", std::move(g)};
  }
  if (p.model == "affine") {
    AffineGame g;
    g.num_players = n;
    g.resources = names;
    g.strategy_spaces = std::move(spaces);
    g.priority = random_priorities(rng, n, values);
    for (int e = 0; e < m; ++e) {
      g.alpha.push_back(small_rational(rng, p.max_delay));
      g.beta.push_back(small_rational(rng, p.max_delay));
    }
    reduce_affine_to_priority(g);
    return {"affine", std::move(g)};
  }
  if (p.model == "market") {
    MarketSpec spec;
    spec.num_players = n;
    spec.resources = names;
    spec.strategy_spaces = std::move(spaces);
    spec.costs.assign(n, std::vector<Rational>(m));
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < m; ++e) {
        spec.costs[i][e] = make_rational(values[rng.below(values.size())], 2);
      }
    }
    const auto levels = market_cost_levels(spec.costs, m);
    for (int e = 0; e < m; ++e) {
      MarketDelay d;
      d.levels = levels[e];
      TableDelay t = random_table(rng, n, p.max_delay, p.infinity_percent);
      for (size_t k = 0; k < d.levels.size(); ++k) {
        if (k > 0) t = add_tables(t, random_table(rng, n, p.max_delay, 0));
        d.tables.push_back(t);
      }
      spec.delays.push_back(std::move(d));
    }
    return {"market", build_market(std::move(spec))};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model '" + p.model + "'");
}

}  // namespace pcg
