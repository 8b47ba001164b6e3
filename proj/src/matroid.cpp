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

#include "pcg/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace pcg {

namespace {

constexpr int kMaxGraphicEdges = 12;

ResourceSet set_union(const std::vector<ResourceSet>& sets) {
  ResourceSet all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  return make_set(std::move(all));
}

// Calls fn on every size-k subset of `ground`, in lexicographic order.
template <typename Fn>
void for_each_combination(const ResourceSet& ground, int k, Fn&& fn) {
  const int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  ResourceSet pick(k);
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = ground[idx[i]];
    fn(pick);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int root = find(it->second);
    parent[x] = root;
    return root;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::string set_string(const ResourceSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

ResourceSet swapped(const ResourceSet& s, ResourceId out, ResourceId in) {
  ResourceSet r;
  r.reserve(s.size());
  for (ResourceId x : s) {
    if (x != out) r.push_back(x);
  }
  r.insert(std::upper_bound(r.begin(), r.end(), in), in);
  return r;
}

}  // namespace

ResourceSet make_set(std::vector<ResourceId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const ResourceSet& set, ResourceId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

WeightKey weight_key(const ResourceSet& set, const Weights& weights) {
  WeightKey key;
  for (ResourceId e : set) {
    const ExtCost& w = weights.at(e);
    if (w.is_infinite()) {
      ++key.infinite_count;
    } else {
      key.finite_sum += w.value();
    }
  }
  return key;
}

ExtCost total_weight(const ResourceSet& set, const Weights& weights) {
  ExtCost total;
  for (ResourceId e : set) total += weights.at(e);
  return total;
}

StrategySpace StrategySpace::singleton(ResourceSet allowed) {
  StrategySpace s;
  s.kind_ = Kind::kSingleton;
  s.ground_ = make_set(std::move(allowed));
  s.rank_ = 1;
  return s;
}

StrategySpace StrategySpace::explicit_sets(std::vector<ResourceSet> sets) {
  StrategySpace s;
  s.kind_ = Kind::kExplicit;
  for (auto& set : sets) set = make_set(std::move(set));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  s.sets_ = std::move(sets);
  s.ground_ = set_union(s.sets_);
  for (const auto& set : s.sets_) {
    s.rank_ = std::max(s.rank_, static_cast<int>(set.size()));
  }
  return s;
}

StrategySpace StrategySpace::uniform(ResourceSet ground, int rank) {
  StrategySpace s;
  s.kind_ = Kind::kUniform;
  s.ground_ = make_set(std::move(ground));
  s.rank_ = rank;
  return s;
}

StrategySpace StrategySpace::partition(std::vector<ResourceSet> blocks,
                                       std::vector<int> caps) {
  StrategySpace s;
  s.kind_ = Kind::kPartition;
  for (auto& b : blocks) b = make_set(std::move(b));
  s.blocks_ = std::move(blocks);
  s.caps_ = std::move(caps);
  s.ground_ = set_union(s.blocks_);
  s.rank_ = std::accumulate(s.caps_.begin(), s.caps_.end(), 0);
  return s;
}

StrategySpace StrategySpace::graphic(std::vector<GraphEdge> edges) {
  StrategySpace s;
  s.kind_ = Kind::kGraphic;
  std::sort(edges.begin(), edges.end(),
            [](const GraphEdge& a, const GraphEdge& b) {
              return a.element < b.element;
            });
  s.edges_ = std::move(edges);
  ResourceSet ground;
  for (const auto& e : s.edges_) ground.push_back(e.element);
  s.ground_ = make_set(std::move(ground));
  s.rank_ = s.graph_rank();
  return s;
}

StrategySpace StrategySpace::explicit_bases(std::vector<ResourceSet> bases) {
  StrategySpace s = explicit_sets(std::move(bases));
  s.kind_ = Kind::kExplicitBases;
  return s;
}

bool StrategySpace::is_singleton_space() const {
  if (kind_ == Kind::kExplicit || kind_ == Kind::kExplicitBases) {
    return std::all_of(sets_.begin(), sets_.end(),
                       [](const ResourceSet& s) { return s.size() == 1; });
  }
  return rank_ == 1;
}

int StrategySpace::graph_rank() const {
  UnionFind uf;
  int rank = 0;
  for (const auto& e : edges_) {
    if (uf.unite(e.u, e.v)) ++rank;
  }
  return rank;
}

bool StrategySpace::graph_acyclic(const ResourceSet& s) const {
  UnionFind uf;
  for (ResourceId id : s) {
    auto it = std::find_if(edges_.begin(), edges_.end(),
                           [id](const GraphEdge& e) { return e.element == id; });
    if (it == edges_.end()) return false;
    if (!uf.unite(it->u, it->v)) return false;
  }
  return true;
}

bool StrategySpace::is_independent(const ResourceSet& s) const {
  if (!std::includes(ground_.begin(), ground_.end(), s.begin(), s.end())) {
    return false;
  }
  switch (kind_) {
    case Kind::kSingleton:
      return s.size() <= 1;
    case Kind::kUniform:
      return static_cast<int>(s.size()) <= rank_;
    case Kind::kPartition:
      for (size_t b = 0; b < blocks_.size(); ++b) {
        int used = 0;
        for (ResourceId x : s) used += contains(blocks_[b], x) ? 1 : 0;
        if (used > caps_[b]) return false;
      }
      return true;
    case Kind::kGraphic:
      return graph_acyclic(s);
    case Kind::kExplicitBases:
      return std::any_of(sets_.begin(), sets_.end(), [&](const ResourceSet& b) {
        return std::includes(b.begin(), b.end(), s.begin(), s.end());
      });
    case Kind::kExplicit:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "independence is undefined for an explicit set family");
}

bool StrategySpace::is_base(const ResourceSet& s) const {
  if (kind_ == Kind::kExplicit || kind_ == Kind::kExplicitBases) {
    return std::binary_search(sets_.begin(), sets_.end(), s);
  }
  return static_cast<int>(s.size()) == rank_ && is_independent(s);
}

std::vector<ResourceSet> StrategySpace::all_bases() const {
  if (kind_ == Kind::kExplicit || kind_ == Kind::kExplicitBases) return sets_;
  std::vector<ResourceSet> out;
  for_each_combination(ground_, rank_, [&](const ResourceSet& pick) {
    if (is_independent(pick)) out.push_back(pick);
  });
  return out;
}

std::vector<Diagnostic> StrategySpace::validate() const {
  std::vector<Diagnostic> out;
  auto fail = [&](std::string msg) { out.push_back({"", std::move(msg)}); };
  switch (kind_) {
    case Kind::kSingleton:
      if (ground_.empty()) fail("empty strategy space");
      break;
    case Kind::kExplicit:
      if (sets_.empty()) fail("empty strategy space");
      for (const auto& s : sets_) {
        if (s.empty()) fail("strategy must contain at least one resource");
      }
      break;
    case Kind::kUniform:
      if (rank_ < 1 || rank_ > static_cast<int>(ground_.size())) {
        fail("uniform rank " + std::to_string(rank_) +
             " outside 1.." + std::to_string(ground_.size()));
      }
      break;
    case Kind::kPartition: {
      if (blocks_.size() != caps_.size()) {
        fail("partition needs one cap per block");
        break;
      }
      size_t total = 0;
      for (size_t b = 0; b < blocks_.size(); ++b) {
        total += blocks_[b].size();
        if (caps_[b] < 0 || caps_[b] > static_cast<int>(blocks_[b].size())) {
          fail("partition cap " + std::to_string(caps_[b]) + " invalid for block " +
               std::to_string(b));
        }
      }
      if (total != ground_.size()) fail("partition blocks overlap");
      if (rank_ < 1) fail("empty strategy space");
      break;
    }
    case Kind::kGraphic: {
      if (edges_.empty()) {
        fail("empty strategy space");
        break;
      }
      if (static_cast<int>(edges_.size()) > kMaxGraphicEdges) {
        fail("graphic spaces are limited to " +
             std::to_string(kMaxGraphicEdges) + " edges");
      }
      if (ground_.size() != edges_.size()) fail("graphic edge ids repeat");
      std::set<int> nodes;
      for (const auto& e : edges_) {
        nodes.insert(e.u);
        nodes.insert(e.v);
      }
      if (rank_ != static_cast<int>(nodes.size()) - 1) {
        fail("graphic space must be a connected graph");
      }
      if (rank_ < 1) fail("empty strategy space");
      break;
    }
    case Kind::kExplicitBases: {
      if (sets_.empty()) {
        fail("empty strategy space");
        break;
      }
      for (const auto& s : sets_) {
        if (s.size() != sets_.front().size()) {
          fail("bases " + set_string(sets_.front()) + " and " + set_string(s) +
               " differ in cardinality");
        }
      }
      if (sets_.front().empty()) fail("bases must be nonempty");
      if (!out.empty()) break;
      for (const auto& s : sets_) {
        for (const auto& t : sets_) {
          for (ResourceId e : s) {
            if (contains(t, e)) continue;
            bool found = false;
            for (ResourceId f : t) {
              if (!contains(s, f) && is_base(swapped(s, e, f))) {
                found = true;
                break;
              }
            }
            if (!found) {
              fail("exchange axiom fails for " + set_string(s) + " -> " +
                   set_string(t) + " removing " + std::to_string(e));
            }
          }
        }
      }
      break;
    }
  }
  return out;
}

bool is_base(const StrategySpace& space, const ResourceSet& s) {
  return space.is_base(s);
}

ResourceId exchange_step(const StrategySpace& space, const ResourceSet& s,
                         const ResourceSet& target, ResourceId e) {
  if (!space.is_base(s) || !space.is_base(target) || !contains(s, e) ||
      contains(target, e)) {
    throw Error(ErrorCode::kInvalidArgument,
                "exchange_step needs bases s, target and e in s \\ target");
  }
  for (ResourceId f : target) {
    if (contains(s, f)) continue;
    if (space.is_base(swapped(s, e, f))) return f;
  }
  throw Error(ErrorCode::kNoExchange,
              "no exchange partner for element " + std::to_string(e));
}

ResourceSet greedy_min_base(const StrategySpace& space,
                            const Weights& weights) {
  if (!space.is_matroid()) {
    const auto sets = space.all_bases();
    const ResourceSet* best = nullptr;
    WeightKey best_key;
    for (const auto& s : sets) {
      WeightKey k = weight_key(s, weights);
      if (best == nullptr || k < best_key) {
        best = &s;
        best_key = std::move(k);
      }
    }
    return best ? *best : ResourceSet{};
  }
  ResourceSet order = space.ground();
  std::stable_sort(order.begin(), order.end(),
                   [&](ResourceId a, ResourceId b) {
                     return weights.at(a) < weights.at(b);
                   });
  ResourceSet chosen;
  for (ResourceId e : order) {
    if (static_cast<int>(chosen.size()) == space.rank()) break;
    ResourceSet trial = chosen;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
    if (space.is_independent(trial)) chosen = std::move(trial);
  }
  return chosen;
}

std::vector<ResourceSet> lazy_path(const StrategySpace& space,
                                   const ResourceSet& from,
                                   const ResourceSet& to,
                                   const Weights& weights) {
  const WeightKey target = weight_key(to, weights);
  WeightKey current_key = weight_key(from, weights);
  if (!(target < current_key)) {
    throw Error(ErrorCode::kNotImproving,
                "target base is not strictly lighter than the start");
  }
  std::vector<ResourceSet> path{from};
  while (target < current_key) {
    const ResourceSet& current = path.back();
    std::optional<ResourceSet> best;
    WeightKey best_key;
    for (ResourceId out : current) {
      for (ResourceId in : space.ground()) {
        if (contains(current, in)) continue;
        if (!(weights.at(in) < weights.at(out))) continue;
        ResourceSet next = swapped(current, out, in);
        if (!space.is_base(next)) continue;
        WeightKey k = weight_key(next, weights);
        if (!best || k < best_key) {
          best = std::move(next);
          best_key = std::move(k);
        }
      }
    }
    if (!best) {
      throw Error(ErrorCode::kNoExchange,
                  "no improving swap although a lighter base exists");
    }
    path.push_back(std::move(*best));
    current_key = std::move(best_key);
  }
  return path;
}

}  // namespace pcg
