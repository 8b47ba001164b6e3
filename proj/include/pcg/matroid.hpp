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

#ifndef PCG_MATROID_HPP_
#define PCG_MATROID_HPP_

#include <compare>
#include <span>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/ext_cost.hpp"

namespace pcg {

using ResourceId = int;
using PlayerId = int;

/// Sorted, duplicate-free list of resource ids. Comparing two ResourceSets
/// with `<` is the id-lexicographic order used for every tie-break.
using ResourceSet = std::vector<ResourceId>;

ResourceSet make_set(std::vector<ResourceId> ids);
bool contains(const ResourceSet& set, ResourceId id);

/// Per-resource weights, indexed by resource id.
using Weights = std::vector<ExtCost>;

/// Total order refining the saturating sum: first the number of infinite
/// weights, then the sum of the finite ones. Two sets with equal finite
/// totals compare equal under both orders.
struct WeightKey {
  int infinite_count = 0;
  Rational finite_sum = 0;

  friend bool operator==(const WeightKey& a, const WeightKey& b) {
    return a.infinite_count == b.infinite_count && a.finite_sum == b.finite_sum;
  }
  friend std::strong_ordering operator<=>(const WeightKey& a,
                                          const WeightKey& b) {
    if (auto c = a.infinite_count <=> b.infinite_count; c != 0) return c;
    return cmp(a.finite_sum, b.finite_sum) <=> 0;
  }
};

WeightKey weight_key(const ResourceSet& set, const Weights& weights);
ExtCost total_weight(const ResourceSet& set, const Weights& weights);

struct GraphEdge {
  int u = 0;
  int v = 0;
  ResourceId element = 0;
};

/// A player's strategy space.
///
/// Every kind except kExplicit is a matroid whose bases are the strategies.
/// kExplicit is an arbitrary set family; best responses over it fall back to
/// enumeration.
class StrategySpace {
 public:
  enum class Kind {
    kSingleton,
    kExplicit,
    kUniform,
    kPartition,
    kGraphic,
    kExplicitBases,
  };

  static StrategySpace singleton(ResourceSet allowed);
  static StrategySpace explicit_sets(std::vector<ResourceSet> sets);
  static StrategySpace uniform(ResourceSet ground, int rank);
  static StrategySpace partition(std::vector<ResourceSet> blocks,
                                 std::vector<int> caps);
  static StrategySpace graphic(std::vector<GraphEdge> edges);
  static StrategySpace explicit_bases(std::vector<ResourceSet> bases);

  Kind kind() const { return kind_; }
  bool is_matroid() const { return kind_ != Kind::kExplicit; }
  /// Every strategy has exactly one element.
  bool is_singleton_space() const;

  const ResourceSet& ground() const { return ground_; }
  /// Common base size; for kExplicit the largest set size.
  int rank() const { return rank_; }

  bool is_base(const ResourceSet& s) const;
  /// Matroid independence oracle. Undefined for kExplicit (throws).
  bool is_independent(const ResourceSet& s) const;
  /// Every strategy, id-lexicographically sorted. Desk scale only.
  std::vector<ResourceSet> all_bases() const;

  /// Structural checks run at build time: nonempty family, equal base
  /// cardinality and the exchange axiom for explicit bases, connectivity for
  /// graphic spaces. Empty result means the space is well formed.
  std::vector<Diagnostic> validate() const;

  const std::vector<ResourceSet>& sets() const { return sets_; }
  const std::vector<ResourceSet>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

 private:
  StrategySpace() = default;
  bool graph_acyclic(const ResourceSet& s) const;
  int graph_rank() const;

  Kind kind_ = Kind::kSingleton;
  ResourceSet ground_;
  int rank_ = 0;
  std::vector<ResourceSet> sets_;
  std::vector<ResourceSet> blocks_;
  std::vector<int> caps_;
  std::vector<GraphEdge> edges_;
};

bool is_base(const StrategySpace& space, const ResourceSet& s);

/// Smallest-id e' in target \ s with (s - e) + e' a base. Throws
/// Error(kNoExchange) if none exists, which can only happen for a family that
/// violates the exchange axiom.
ResourceId exchange_step(const StrategySpace& space, const ResourceSet& s,
                         const ResourceSet& target, ResourceId e);

/// Minimum-weight base. Matroids use the greedy algorithm over elements
/// sorted by (weight, id), which also makes the result the id-lexicographically
/// smallest among minimum-weight bases; explicit families are scanned.
ResourceSet greedy_min_base(const StrategySpace& space, const Weights& weights);

/// Chain of single-swap bases from `from` down to a base weighing no more
/// than `to`, each strictly lighter than its predecessor (under WeightKey).
/// At every step the swap with the largest decrease is applied, ties broken
/// by the removed id and then the added id. Throws Error(kNotImproving) when
/// `to` is not strictly lighter than `from`.
std::vector<ResourceSet> lazy_path(const StrategySpace& space,
                                   const ResourceSet& from,
                                   const ResourceSet& to,
                                   const Weights& weights);

}  // namespace pcg

#endif  // PCG_MATROID_HPP_
