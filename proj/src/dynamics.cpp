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

#include "pcg/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "pcg/potentials.hpp"

namespace pcg {

namespace {

using PotentialFn = std::function<std::string(const State&)>;

struct Recorder {
  const Game& game;
  State& state;
  std::vector<Step>& rows;
  int next_step = 1;

  void place(PlayerId i, ResourceSet to, const std::string& phase,
             const PotentialFn& potential) {
    state.place(i, to);
    rows.push_back({next_step++, phase, i, std::nullopt, std::move(to),
                    std::nullopt, player_cost(game, state, i),
                    potential ? potential(state) : std::string()});
  }

  void discard(PlayerId i, const std::string& phase,
               const PotentialFn& potential) {
    ExtCost before = player_cost(game, state, i);
    ResourceSet from = state.strategy(i);
    state.remove(i);
    rows.push_back({next_step++, phase, i, std::move(from), std::nullopt,
                    std::move(before), std::nullopt,
                    potential ? potential(state) : std::string()});
  }

  // Moves a placed player to `target`, one swap per row on matroid spaces.
  void move(PlayerId i, const ResourceSet& target, const std::string& phase,
            const PotentialFn& potential) {
    const StrategySpace& space = game.space(i);
    const ResourceSet current = state.strategy(i);
    std::vector<ResourceSet> path;
    if (space.is_matroid() && !space.is_singleton_space()) {
      path = lazy_path(space, current, target, entry_weights(game, state, i));
    } else {
      path = {current, target};
    }
    for (size_t k = 1; k < path.size(); ++k) {
      ExtCost before = player_cost(game, state, i);
      state.place(i, path[k]);
      rows.push_back({next_step++, phase, i, path[k - 1], path[k],
                      std::move(before), player_cost(game, state, i),
                      potential ? potential(state) : std::string()});
    }
  }
};

// Improvement available to a placed player, if any.
std::optional<BestResponse> improvement(const Game& game, const State& state,
                                        PlayerId i) {
  BestResponse br = compute_best_response(game, state, i);
  if (br.cost < player_cost(game, state, i)) return br;
  return std::nullopt;
}

bool has_lex_potential(const Game& game) {
  if (game.player_specific()) return false;
  for (int i = 0; i < game.num_players(); ++i) {
    if (!game.space(i).is_matroid()) return false;
  }
  return true;
}

}  // namespace

ResourceSet best_response(const Game& game, const Profile& profile, PlayerId i) {
  return compute_best_response(game, State::from_profile(profile), i).strategy;
}

SolveResult run_dynamics(const Game& game, const Profile& start, Policy policy,
                         long cap) {
  const int n = game.num_players();
  SolveResult result;
  State state(n);
  PotentialFn potential;
  if (has_lex_potential(game)) {
    potential = [&game](const State& s) {
      return potential_to_string(lex_potential(game, s.to_profile()));
    };
  }
  for (PlayerId i = 0; i < n; ++i) {
    state.place(i, start.at(i));
    result.trace.steps.push_back(
        {0, "init", i, std::nullopt, start[i], std::nullopt, std::nullopt,
         i + 1 == n && potential ? potential(state) : std::string()});
  }
  Recorder rec{game, state, result.trace.steps};

  long moves = 0;
  PlayerId cursor = 0;
  while (true) {
    std::optional<PlayerId> mover;
    std::optional<BestResponse> chosen;
    if (policy == Policy::kRoundRobin) {
      for (int k = 0; k < n && !mover; ++k) {
        const PlayerId i = (cursor + k) % n;
        if (auto br = improvement(game, state, i)) {
          mover = i;
          chosen = std::move(br);
        }
      }
    } else if (policy == Policy::kFirstImprover) {
      for (PlayerId i = 0; i < n && !mover; ++i) {
        if (auto br = improvement(game, state, i)) {
          mover = i;
          chosen = std::move(br);
        }
      }
    } else {
      // Largest decrease; leaving an infinite cost beats any finite gain.
      std::optional<Rational> best_gain;
      bool best_infinite = false;
      for (PlayerId i = 0; i < n; ++i) {
        auto br = improvement(game, state, i);
        if (!br) continue;
        const ExtCost now = player_cost(game, state, i);
        const bool infinite = now.is_infinite();
        const Rational gain = infinite ? Rational(0) : now - br->cost;
        bool better = !mover;
        if (mover) {
          better = infinite ? !best_infinite
                            : (!best_infinite && gain > *best_gain);
        }
        if (better) {
          mover = i;
          chosen = std::move(br);
          best_gain = gain;
          best_infinite = infinite;
        }
      }
    }
    if (!mover) break;
    if (moves >= cap) {
      result.trace.status = RunStatus::kCapReached;
      break;
    }
    rec.move(*mover, chosen->strategy, "br", potential);
    ++moves;
    cursor = (*mover + 1) % n;
  }
  result.profile = state.to_profile();
  return result;
}

SolveResult solve_consistent_layered(const Game& game,
                                     const LayeredOptions& options) {
  if (!game.priorities().is_consistent()) {
    throw Error(ErrorCode::kInconsistentPriorities,
                "the layered solver needs consistent priorities");
  }
  const int n = game.num_players();
  const int m = game.num_resources();
  std::set<int> level_set;
  for (PlayerId i = 0; i < n; ++i) level_set.insert(game.priority(0, i));
  const long levels = static_cast<long>(level_set.size());
  const long cap =
      options.layer_cap > 0 ? options.layer_cap : 1L * n * n * m * levels;

  SolveResult result;
  State state(n);
  Recorder rec{game, state, result.trace.steps};

  for (int q : level_set) {
    std::vector<PlayerId> layer;
    for (PlayerId i = 0; i < n; ++i) {
      if (game.priority(0, i) == q) layer.push_back(i);
    }
    const std::string tag = "L" + std::to_string(q);
    PotentialFn potential;
    if (!game.player_specific()) {
      potential = [&game, q](const State& s) {
        auto [outer, inner] = split_at_level(game, s, q);
        return potential_to_string(level_potential(game, outer, q, inner));
      };
    }

    if (!game.player_specific()) {
      for (PlayerId i : layer) {
        rec.place(i, compute_best_response(game, state, i).strategy,
                  tag + ":place", potential);
      }
      bool moved = true;
      while (moved) {
        moved = false;
        for (PlayerId i : layer) {
          if (auto br = improvement(game, state, i)) {
            rec.move(i, br->strategy, tag + ":br", potential);
            moved = true;
          }
        }
      }
      continue;
    }

    // Player-specific layer: capped dynamics, restarting with a rotated
    // placement order until an attempt converges.
    const State base = state;
    const size_t base_rows = result.trace.steps.size();
    const int base_step = rec.next_step;
    bool converged = false;
    for (int attempt = 0; attempt <= options.restarts && !converged; ++attempt) {
      if (attempt > 0) {
        state = base;
        result.trace.steps.resize(base_rows);
        rec.next_step = base_step;
        ++result.counters["restarts"];
      }
      std::vector<PlayerId> order = layer;
      if (!order.empty()) {
        std::rotate(order.begin(),
                    order.begin() + attempt % static_cast<int>(order.size()),
                    order.end());
      }
      for (PlayerId i : order) {
        rec.place(i, compute_best_response(game, state, i).strategy,
                  tag + ":place", potential);
      }
      std::deque<PlayerId> displaced;
      long moves = 0;
      while (true) {
        std::optional<PlayerId> mover;
        std::optional<BestResponse> chosen;
        while (!displaced.empty() && !mover) {
          const PlayerId j = displaced.front();
          displaced.pop_front();
          if (auto br = improvement(game, state, j)) {
            mover = j;
            chosen = std::move(br);
          }
        }
        for (size_t k = 0; k < layer.size() && !mover; ++k) {
          if (auto br = improvement(game, state, layer[k])) {
            mover = layer[k];
            chosen = std::move(br);
          }
        }
        if (!mover) {
          converged = true;
          break;
        }
        if (moves >= cap) break;
        rec.move(*mover, chosen->strategy, tag + ":br", potential);
        ++moves;
        for (PlayerId j : layer) {
          if (j == *mover) continue;
          for (ResourceId e : state.strategy(*mover)) {
            if (contains(state.strategy(j), e)) {
              displaced.push_back(j);
              break;
            }
          }
        }
      }
    }
    if (!converged) {
      throw Error(ErrorCode::kLayerCapExhausted,
                  "layer " + std::to_string(q) + " did not converge within " +
                      std::to_string(cap) + " moves after " +
                      std::to_string(options.restarts) + " restarts");
    }
  }
  result.profile = state.to_profile();
  return result;
}

SolveResult solve_insertion(const Game& game, const InsertionOptions& options) {
  if (!game.all_singleton()) {
    throw Error(ErrorCode::kNotSingleton,
                "the insertion algorithm needs singleton strategy spaces");
  }
  const int n = game.num_players();
  SolveResult result;
  State state(n);
  Recorder rec{game, state, result.trace.steps};
  const PotentialFn potential = [&game](const State& s) {
    return potential_to_string(insertion_potential(game, s));
  };
  auto note = [&](long round, const std::string& what) {
    result.diagnostics.push_back("round " + std::to_string(round) + ": " + what);
  };

  std::deque<PlayerId> queue;
  for (PlayerId i = 0; i < n; ++i) queue.push_back(i);
  long round = 0;
  InsertionPotential last = insertion_potential(game, state);

  while (!queue.empty()) {
    if (round >= options.max_rounds) {
      result.trace.status = RunStatus::kCapReached;
      return result;
    }
    ++round;
    const PlayerId i = queue.front();
    queue.pop_front();

    const Weights w = entry_weights(game, state, i);
    ResourceId e = game.space(i).ground().front();
    for (ResourceId r : game.space(i).ground()) {
      if (w[r] < w[e]) e = r;
    }
    const int level = game.priority(e, i);
    const State before = state;
    const int same_level_before = congestion_view(game, before, e).at(level);

    rec.place(i, {e}, "insert", potential);

    std::vector<PlayerId> equal_improvers;
    std::vector<PlayerId> lower_improvers;
    for (PlayerId j : state.covered()) {
      if (j == i || !contains(state.strategy(j), e)) continue;
      if (!improvement(game, state, j)) continue;
      const int pj = game.priority(e, j);
      if (pj == level) {
        equal_improvers.push_back(j);
      } else if (pj > level) {
        lower_improvers.push_back(j);
      } else {
        note(round, "player " + std::to_string(j + 1) +
                        " above the newcomer gained an improvement");
      }
    }

    if (!equal_improvers.empty()) {
      const PlayerId j = equal_improvers.front();
      ++result.counters["case_b1"];
      if (options.check_invariants) {
        const int tol_j = tolerance(game, before, j);
        if (tol_j != same_level_before) {
          note(round, "tolerance of the discarded player is " +
                          std::to_string(tol_j) + ", expected " +
                          std::to_string(same_level_before));
        }
      }
      rec.discard(j, "discard", potential);
      queue.push_back(j);
      if (options.check_invariants) {
        const int tol_i = tolerance(game, state, i);
        if (tol_i < same_level_before + 1) {
          note(round, "tolerance of the newcomer is " + std::to_string(tol_i) +
                          ", expected at least " +
                          std::to_string(same_level_before + 1));
        }
      }
    } else if (!lower_improvers.empty()) {
      ++result.counters["case_b2"];
      for (PlayerId j : lower_improvers) {
        rec.discard(j, "discard", potential);
        queue.push_back(j);
      }
    } else {
      ++result.counters["case_a"];
    }

    if (options.repair) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (PlayerId j : state.covered()) {
          if (!improvement(game, state, j)) continue;
          rec.discard(j, "repair", potential);
          queue.push_back(j);
          ++result.counters["repairs"];
          changed = true;
        }
      }
    }

    if (options.check_invariants) {
      for (PlayerId j : state.covered()) {
        if (improvement(game, state, j)) {
          note(round, "no-incentive invariant broken: player " +
                          std::to_string(j + 1) + " can improve");
        }
      }
      InsertionPotential now = insertion_potential(game, state);
      if (insertion_potential_compare(last, now) != std::strong_ordering::less) {
        note(round, "insertion potential did not increase");
      }
      last = std::move(now);
    }
  }
  result.profile = state.to_profile();
  return result;
}

StepStats count_steps(const MoveTrace& trace) {
  StepStats stats;
  for (const Step& s : trace.steps) {
    if (s.step < 1) continue;
    ++stats.total;
    ++stats.per_phase[s.phase];
    if (!s.to) {
      ++stats.discards;
    } else if (!s.from) {
      if (s.phase == "insert") {
        ++stats.insertions;
      } else {
        ++stats.placements;
      }
    } else {
      ++stats.moves;
    }
  }
  return stats;
}

}  // namespace pcg
