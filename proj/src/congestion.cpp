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

#include "pcg/congestion.hpp"

#include <string>

namespace pcg {

State State::from_profile(const Profile& profile) {
  State s(static_cast<int>(profile.size()));
  for (size_t i = 0; i < profile.size(); ++i) s.slots_[i] = profile[i];
  return s;
}

const ResourceSet& State::strategy(PlayerId i) const {
  const auto& slot = slots_.at(i);
  if (!slot) {
    throw Error(ErrorCode::kPlayerNotPlaced,
                "player " + std::to_string(i + 1) + " is not placed");
  }
  return *slot;
}

std::vector<PlayerId> State::covered() const {
  std::vector<PlayerId> out;
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i]) out.push_back(static_cast<PlayerId>(i));
  }
  return out;
}

bool State::is_full() const {
  for (const auto& s : slots_) {
    if (!s) return false;
  }
  return true;
}

Profile State::to_profile() const {
  Profile p;
  p.reserve(slots_.size());
  for (size_t i = 0; i < slots_.size(); ++i) {
    p.push_back(strategy(static_cast<PlayerId>(i)));
  }
  return p;
}

int CongestionView::below(int q) const {
  int n = 0;
  for (auto it = levels.begin(); it != levels.end() && it->first < q; ++it) {
    n += it->second;
  }
  return n;
}

int CongestionView::at(int q) const {
  auto it = levels.find(q);
  return it == levels.end() ? 0 : it->second;
}

std::vector<int> CongestionView::present_levels() const {
  std::vector<int> out;
  for (const auto& [q, count] : levels) out.push_back(q);
  return out;
}

std::optional<int> CongestionView::min_priority() const {
  if (levels.empty()) return std::nullopt;
  return levels.begin()->first;
}

CongestionView congestion_view(const Game& game, const State& state,
                               ResourceId e) {
  CongestionView view;
  for (int j = 0; j < state.num_players(); ++j) {
    if (!state.covers(j) || !contains(state.strategy(j), e)) continue;
    ++view.total;
    ++view.levels[game.priority(e, j)];
  }
  return view;
}

namespace {

// (x, y) that player i sees at resource e: co-users strictly above her, and
// co-users at her level counting herself. Her own membership is ignored, so
// the result is the same whether or not she currently uses e.
std::pair<int, int> seen_counts(const Game& game, const State& state,
                                PlayerId i, ResourceId e) {
  const int q = game.priority(e, i);
  int above = 0;
  int level = 1;
  for (int j = 0; j < state.num_players(); ++j) {
    if (j == i || !state.covers(j) || !contains(state.strategy(j), e)) continue;
    const int pj = game.priority(e, j);
    if (pj < q) {
      ++above;
    } else if (pj == q) {
      ++level;
    }
  }
  return {above, level};
}

}  // namespace

ExtCost player_cost(const Game& game, const State& state, PlayerId i) {
  ExtCost total;
  for (ResourceId e : state.strategy(i)) {
    auto [x, y] = seen_counts(game, state, i, e);
    total += game.eval(i, e, x, y);
  }
  return total;
}

ExtCost player_cost(const Game& game, const Profile& profile, PlayerId i) {
  return player_cost(game, State::from_profile(profile), i);
}

WeightKey player_cost_key(const Game& game, const State& state, PlayerId i) {
  const Weights w = entry_weights(game, state, i);
  return weight_key(state.strategy(i), w);
}

Weights entry_weights(const Game& game, const State& state, PlayerId i) {
  Weights w(static_cast<size_t>(game.num_resources()), ExtCost::infinity());
  for (ResourceId e : game.space(i).ground()) {
    auto [x, y] = seen_counts(game, state, i, e);
    w[e] = game.eval(i, e, x, y);
  }
  return w;
}

Weights entry_weights(const Game& game, const Profile& profile, PlayerId i) {
  return entry_weights(game, State::from_profile(profile), i);
}

BestResponse compute_best_response(const Game& game, const State& state,
                                   PlayerId i) {
  const StrategySpace& space = game.space(i);
  const Weights w = entry_weights(game, state, i);
  ResourceSet best = greedy_min_base(space, w);
  ExtCost best_cost = total_weight(best, w);
  if (state.covers(i)) {
    const ResourceSet& current = state.strategy(i);
    ExtCost current_cost = total_weight(current, w);
    if (current_cost == best_cost) return {current, std::move(current_cost)};
  }
  return {std::move(best), std::move(best_cost)};
}

bool is_better_response(const Game& game, const Profile& profile, PlayerId i,
                        const ResourceSet& new_strategy) {
  const State state = State::from_profile(profile);
  const Weights w = entry_weights(game, state, i);
  return total_weight(new_strategy, w) < total_weight(profile[i], w);
}

bool some_covered_player_can_improve(const Game& game, const State& state) {
  for (PlayerId i : state.covered()) {
    const Weights w = entry_weights(game, state, i);
    const ResourceSet best = greedy_min_base(game.space(i), w);
    if (total_weight(best, w) < total_weight(state.strategy(i), w)) return true;
  }
  return false;
}

bool is_pure_nash(const Game& game, const Profile& profile) {
  return !some_covered_player_can_improve(game, State::from_profile(profile));
}

}  // namespace pcg
