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

#include <algorithm>
#include <set>

#include "pcg/generator.hpp"
#include "pcg/matroid.hpp"

namespace pcg {
namespace {

constexpr ResourceId a = 0, b = 1, c = 2, d = 3;

Weights w(std::initializer_list<long> values) {
  Weights out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Triangle on nodes 0,1,2 with edges ab = 0, bc = 1, ca = 2.
StrategySpace triangle() {
  return StrategySpace::graphic({{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
}

TEST(Matroid, BaseMembership) {
  const auto u = StrategySpace::uniform({a, b, c}, 2);
  EXPECT_TRUE(u.is_base({a, c}));
  EXPECT_FALSE(u.is_base({a}));
  const auto eb = StrategySpace::explicit_bases({{a, b}, {b, c}});
  EXPECT_FALSE(eb.is_base({a, c}));
  EXPECT_TRUE(eb.is_base({b, c}));
}

TEST(Matroid, ExchangeStepExamples) {
  EXPECT_EQ(exchange_step(StrategySpace::explicit_bases({{a, b}, {b, c}}), {a, b},
                          {b, c}, a),
            c);
  EXPECT_EQ(exchange_step(StrategySpace::uniform({a, b, c, d}, 2), {a, b}, {c, d}, a),
            c);
  // Trees of the triangle: any two edges. {ab, bc} -> {ab, ca}, drop bc.
  const auto tri = triangle();
  const ResourceId e_prime = exchange_step(tri, {0, 1}, {0, 2}, 1);
  EXPECT_EQ(e_prime, 2);
  EXPECT_EQ(tri.all_bases(), (std::vector<ResourceSet>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Matroid, ExchangeStepExhaustiveOnExplicitBases) {
  const std::vector<std::vector<ResourceSet>> families = {
      {{a, b}, {a, c}, {b, c}},
      {{a, b}, {a, d}, {b, c}, {c, d}, {a, c}, {b, d}},
      {{a, c}, {a, d}, {b, c}, {b, d}},
  };
  for (const auto& fam : families) {
    const auto space = StrategySpace::explicit_bases(fam);
    ASSERT_TRUE(space.validate().empty());
    for (const auto& s : fam) {
      for (const auto& t : fam) {
        for (ResourceId e : s) {
          if (contains(t, e)) continue;
          const ResourceId ep = exchange_step(space, s, t, e);
          EXPECT_TRUE(contains(t, ep) && !contains(s, ep));
          ResourceSet next = s;
          std::erase(next, e);
          next.push_back(ep);
          EXPECT_TRUE(space.is_base(make_set(next)));
        }
      }
    }
  }
}

TEST(Matroid, ExplicitBasesViolatingExchangeRejected) {
  EXPECT_FALSE(StrategySpace::explicit_bases({{a, b}, {c, d}}).validate().empty());
  EXPECT_FALSE(StrategySpace::explicit_bases({{a, b}, {c}}).validate().empty());
}

TEST(Matroid, GreedyExamples) {
  const auto u = StrategySpace::uniform({a, b, c}, 2);
  const ResourceSet g = greedy_min_base(u, w({3, 1, 2}));
  EXPECT_EQ(g, (ResourceSet{b, c}));
  EXPECT_EQ(total_weight(g, w({3, 1, 2})), ExtCost(3));
  const auto eb = StrategySpace::explicit_bases({{a, b}, {b, c}});
  EXPECT_EQ(greedy_min_base(eb, w({1, 1, 5})), (ResourceSet{a, b}));
  EXPECT_EQ(greedy_min_base(u, w({2, 2, 2})), (ResourceSet{a, b}));
  const auto part = StrategySpace::partition({{a, b}, {c, d}}, {1, 1});
  EXPECT_EQ(greedy_min_base(part, w({7, 7, 7, 7})), (ResourceSet{a, c}));
}

TEST(Matroid, LazyPathExamples) {
  const auto u = StrategySpace::uniform({a, b, c}, 2);
  EXPECT_EQ(lazy_path(u, {a, b}, {b, c}, w({3, 1, 1})),
            (std::vector<ResourceSet>{{a, b}, {b, c}}));
  try {
    (void)lazy_path(u, {a, b}, {a, b}, w({3, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotImproving);
  }
  const auto part = StrategySpace::partition({{a, b}, {c, d}}, {1, 1});
  const Weights pw = w({5, 1, 5, 1});
  const auto path = lazy_path(part, {a, c}, {b, d}, pw);
  ASSERT_EQ(path.size(), 3U);
  EXPECT_EQ(total_weight(path[0], pw), ExtCost(10));
  EXPECT_EQ(total_weight(path[1], pw), ExtCost(6));
  EXPECT_EQ(total_weight(path[2], pw), ExtCost(2));
  EXPECT_EQ(path[2], (ResourceSet{b, d}));
}

TEST(Matroid, LazyPathThroughInfiniteWeights) {
  const auto u = StrategySpace::uniform({a, b, c, d}, 2);
  const Weights iw = {ExtCost::infinity(), ExtCost::infinity(), ExtCost(1), ExtCost(2)};
  const auto path = lazy_path(u, {a, b}, {c, d}, iw);
  ASSERT_EQ(path.size(), 3U);
  EXPECT_TRUE(weight_key(path[1], iw) < weight_key(path[0], iw));
  EXPECT_TRUE(total_weight(path[1], iw).is_infinite());
  EXPECT_EQ(total_weight(path[2], iw), ExtCost(3));
}

TEST(Matroid, SingletonMatchesUniformRankOne) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ResourceSet allowed = make_set({a, c, d});
    const auto s = StrategySpace::singleton(allowed);
    const auto u = StrategySpace::uniform(allowed, 1);
    EXPECT_EQ(s.all_bases(), u.all_bases());
    Weights ws;
    for (int e = 0; e < 4; ++e) ws.emplace_back(static_cast<long>(rng.below(4)));
    EXPECT_EQ(greedy_min_base(s, ws), greedy_min_base(u, ws));
  }
}

TEST(Matroid, PartitionAndGraphicBaseCounts) {
  EXPECT_EQ(StrategySpace::partition({{a, b, c}, {d}}, {2, 1}).all_bases().size(), 3U);
  // K4 has 16 spanning trees.
  const auto k4 = StrategySpace::graphic(
      {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
  EXPECT_EQ(k4.all_bases().size(), 16U);
  EXPECT_EQ(k4.rank(), 3);
}

TEST(Matroid, DisconnectedGraphRejected) {
  EXPECT_FALSE(StrategySpace::graphic({{0, 1, 0}, {2, 3, 1}}).validate().empty());
}

}  // namespace
}  // namespace pcg
