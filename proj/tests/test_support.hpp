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

// Shared fixtures plus a hand-rolled reference evaluator that knows nothing
// about the library's congestion code.

#ifndef PCG_TESTS_TEST_SUPPORT_HPP_
#define PCG_TESTS_TEST_SUPPORT_HPP_

#include <functional>
#include <string>
#include <vector>

#include "pcg/congestion.hpp"
#include "pcg/model.hpp"

namespace pcg::testing {

inline TableDelay table(int bound, const std::function<long(int, int)>& fn) {
  return TableDelay::from_function(bound,
                                   [&](int x, int y) { return ExtCost(fn(x, y)); });
}

// Two players, resources a and b, both may pick either; p_a = (1,2),
// p_b = (2,1); d(x, y) = 2x + y tabulated to bound 4.
inline GameSpec t1_spec(bool consistent = false) {
  GameSpec spec;
  spec.num_players = 2;
  spec.resources = {"a", "b"};
  spec.strategy_spaces = {StrategySpace::singleton({0, 1}),
                          StrategySpace::singleton({0, 1})};
  spec.priorities = consistent ? PriorityFunction::consistent({1, 2}, 2)
                               : PriorityFunction::per_resource({{1, 2}, {2, 1}});
  const TableDelay d = table(4, [](int x, int y) { return 2 * x + y; });
  spec.delays = {d, d};
  return spec;
}

inline Game t1(bool consistent = false) { return build_game(t1_spec(consistent)); }

inline ResourceSet rs(std::initializer_list<int> ids) { return make_set(ids); }

// Reference model: strategies as plain sets, costs from the definition.
struct Reference {
  int n = 0;
  std::vector<std::vector<int>> prio;  // prio[e][i]
  std::function<ExtCost(int i, int e, int x, int y)> delay;
  std::vector<std::vector<ResourceSet>> strategies;

  ExtCost cost(const Profile& s, int i) const {
    ExtCost total;
    for (int e : s[i]) {
      int x = 0;
      int y = 0;
      for (int j = 0; j < n; ++j) {
        bool uses = false;
        for (int r : s[j]) uses = uses || r == e;
        if (!uses) continue;
        if (prio[e][j] < prio[e][i]) ++x;
        if (prio[e][j] == prio[e][i]) ++y;
      }
      total = total + delay(i, e, x, y);
    }
    return total;
  }

  bool stable(const Profile& s) const {
    for (int i = 0; i < n; ++i) {
      for (const auto& alt : strategies[i]) {
        Profile d = s;
        d[i] = alt;
        if (cost(d, i) < cost(s, i)) return false;
      }
    }
    return true;
  }

  std::vector<Profile> all_profiles() const {
    std::vector<Profile> out{Profile{}};
    for (int i = 0; i < n; ++i) {
      std::vector<Profile> next;
      for (const auto& p : out) {
        for (const auto& s : strategies[i]) {
          Profile q = p;
          q.push_back(s);
          next.push_back(std::move(q));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<Profile> equilibria() const {
    std::vector<Profile> out;
    for (const auto& p : all_profiles()) {
      if (stable(p)) out.push_back(p);
    }
    return out;
  }
};

// Reference view of a built game, evaluating delays through the public
// delay spec only.
inline Reference reference_of(const Game& g) {
  Reference r;
  r.n = g.num_players();
  r.prio = g.priorities().rows();
  r.delay = [&g](int i, int e, int x, int y) { return evaluate_delay(g.delay(i, e), x, y); };
  for (int i = 0; i < r.n; ++i) r.strategies.push_back(g.space(i).all_bases());
  return r;
}

}  // namespace pcg::testing

#endif  // PCG_TESTS_TEST_SUPPORT_HPP_
