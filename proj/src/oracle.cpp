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

#include "pcg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pcg/potentials.hpp"

namespace pcg {

EnumerationBudget EnumerationBudget::from_env() {
  EnumerationBudget b;
  if (const char* env = std::getenv("PCG_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_profiles = v;
  }
  return b;
}

void enumerate_profiles(const std::vector<std::vector<ResourceSet>>& choices,
                        EnumerationBudget& budget,
                        const std::function<void(const Profile&)>& visit) {
  const size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<size_t> digit(n, 0);
  Profile profile(n);
  for (size_t i = 0; i < n; ++i) profile[i] = choices[i][0];
  while (true) {
    if (budget.observed >= budget.max_profiles) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "profile enumeration exceeded the budget of " +
                      std::to_string(budget.max_profiles));
    }
    ++budget.observed;
    visit(profile);
    size_t k = n;
    while (k > 0) {
      --k;
      if (++digit[k] < choices[k].size()) {
        profile[k] = choices[k][digit[k]];
        break;
      }
      digit[k] = 0;
      profile[k] = choices[k][0];
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

namespace {

std::vector<std::vector<ResourceSet>> strategy_lists(
    const std::vector<StrategySpace>& spaces) {
  std::vector<std::vector<ResourceSet>> out;
  out.reserve(spaces.size());
  for (const auto& s : spaces) out.push_back(s.all_bases());
  return out;
}

// Straight from the definition: count co-users above and at the player's
// level on every resource of her strategy.
ExtCost direct_cost(const Game& game, const Profile& profile, PlayerId i) {
  ExtCost total;
  for (ResourceId e : profile[i]) {
    const int q = game.priority(e, i);
    int above = 0;
    int level = 0;
    for (size_t j = 0; j < profile.size(); ++j) {
      if (!std::binary_search(profile[j].begin(), profile[j].end(), e)) continue;
      const int pj = game.priority(e, static_cast<PlayerId>(j));
      if (pj < q) ++above;
      if (pj == q) ++level;
    }
    total += game.eval(i, e, above, level);
  }
  return total;
}

bool scan_is_pne(const std::vector<std::vector<ResourceSet>>& choices,
                 const CostFn& cost, const Profile& profile) {
  Profile deviated = profile;
  for (size_t i = 0; i < profile.size(); ++i) {
    const PlayerId pi = static_cast<PlayerId>(i);
    const ExtCost now = cost(profile, pi);
    for (const ResourceSet& alt : choices[i]) {
      if (alt == profile[i]) continue;
      deviated[i] = alt;
      const bool better = cost(deviated, pi) < now;
      deviated[i] = profile[i];
      if (better) return false;
    }
  }
  return true;
}

}  // namespace

void enumerate_profiles(const Game& game, EnumerationBudget& budget,
                        const std::function<void(const Profile&)>& visit) {
  enumerate_profiles(strategy_lists(game.spec().strategy_spaces), budget, visit);
}

std::vector<Profile> brute_force_pne(
    const std::vector<std::vector<ResourceSet>>& choices, const CostFn& cost,
    EnumerationBudget& budget) {
  std::vector<Profile> out;
  enumerate_profiles(choices, budget, [&](const Profile& p) {
    if (scan_is_pne(choices, cost, p)) out.push_back(p);
  });
  return out;
}

std::vector<Profile> brute_force_pne(const Game& game, EnumerationBudget& budget) {
  return brute_force_pne(
      strategy_lists(game.spec().strategy_spaces),
      [&game](const Profile& p, PlayerId i) { return direct_cost(game, p, i); },
      budget);
}

std::vector<Profile> brute_force_pne(const MarketGame& market,
                                     EnumerationBudget& budget) {
  return brute_force_pne(
      strategy_lists(market.spec().strategy_spaces),
      [&market](const Profile& p, PlayerId i) {
        return market_player_cost(market, p, i);
      },
      budget);
}

bool is_pure_nash_by_scan(const Game& game, const Profile& profile) {
  return scan_is_pne(
      strategy_lists(game.spec().strategy_spaces),
      [&game](const Profile& p, PlayerId i) { return direct_cost(game, p, i); },
      profile);
}

namespace {

std::string set_text(const std::optional<ResourceSet>& s, const char* empty) {
  if (!s) return empty;
  std::string out = "{";
  for (size_t k = 0; k < s->size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string((*s)[k]);
  }
  return out + "}";
}

class Replay {
 public:
  Replay(const Game& game, CertifyReport& report)
      : game_(game), report_(report), state_(game.num_players()) {}

  void run(const MoveTrace& trace) {
    const bool insertion = std::any_of(
        trace.steps.begin(), trace.steps.end(),
        [](const Step& s) { return s.phase == "insert"; });
    if (insertion && game_.all_singleton()) {
      round_start_ = insertion_potential(game_, state_);
    }
    for (size_t r = 0; r < trace.steps.size(); ++r) {
      const Step& row = trace.steps[r];
      if (row.phase == "insert") close_round(row.step);
      apply(row);
    }
    close_round(-1);
    finish();
  }

 private:
  void flag(int step, std::string message) {
    report_.violations.push_back({step, std::move(message)});
  }

  bool valid_player(const Step& row) {
    if (row.player < 0 || row.player >= game_.num_players()) {
      flag(row.step, "unknown player " + std::to_string(row.player + 1));
      return false;
    }
    return true;
  }

  std::optional<PotentialValue> recompute(const Step& row,
                                          const std::string& kind) {
    try {
      if (kind == "lex") {
        if (!state_.is_full()) return std::nullopt;
        return lex_potential(game_, state_.to_profile());
      }
      if (kind == "ins") return insertion_potential(game_, state_);
      if (kind == "scalar") {
        const int q = phase_level(row);
        if (q < 1) return std::nullopt;
        auto [outer, inner] = split_at_level(game_, state_, q);
        return level_potential(game_, outer, q, inner);
      }
    } catch (const Error& err) {
      flag(row.step, std::string("potential not computable: ") + err.what());
    }
    return std::nullopt;
  }

  static int phase_level(const Step& row) {
    if (row.phase.size() < 2 || row.phase[0] != 'L') return -1;
    const size_t colon = row.phase.find(':');
    try {
      return std::stoi(row.phase.substr(1, colon - 1));
    } catch (...) {
      return -1;
    }
  }

  static std::string kind_of(const std::string& potential) {
    const size_t colon = potential.find(':');
    return colon == std::string::npos ? std::string() : potential.substr(0, colon);
  }

  void apply(const Step& row) {
    if (!valid_player(row)) return;
    const PlayerId i = row.player;
    if (row.step == 0) {
      if (row.to && game_.space(i).is_base(*row.to)) {
        state_.place(i, *row.to);
      } else {
        flag(0, "start strategy of player " + std::to_string(i + 1) +
                    " is not a strategy");
      }
      return;
    }
    const bool was_placed = state_.covers(i);
    if (!row.from) {
      if (was_placed) {
        flag(row.step, "player " + std::to_string(i + 1) +
                           " is placed although the row says NONE");
        return;
      }
    } else if (!was_placed || state_.strategy(i) != *row.from) {
      flag(row.step, "row starts player " + std::to_string(i + 1) + " at " +
                         set_text(row.from, "NONE") +
                         " which is not her current strategy");
      return;
    }
    if (row.to && !game_.space(i).is_base(*row.to)) {
      flag(row.step, set_text(row.to, "") + " is not a strategy of player " +
                         std::to_string(i + 1));
      return;
    }

    const std::string kind = kind_of(row.potential);
    std::optional<PotentialValue> pot_before;
    if (row.from && row.to && (kind == "lex" || kind == "scalar")) {
      pot_before = recompute(row, kind);
    }
    std::optional<ExtCost> before;
    std::optional<WeightKey> key_before;
    if (was_placed) {
      before = player_cost(game_, state_, i);
      key_before = player_cost_key(game_, state_, i);
      if (row.cost_before && *row.cost_before != *before) {
        flag(row.step, "recorded cost_before " + row.cost_before->to_string() +
                           " differs from the replayed " + before->to_string());
      }
    }

    if (row.to) {
      state_.place(i, *row.to);
    } else {
      state_.remove(i);
    }

    std::optional<ExtCost> after;
    if (row.to) {
      after = player_cost(game_, state_, i);
      if (row.cost_after && *row.cost_after != *after) {
        flag(row.step, "recorded cost_after " + row.cost_after->to_string() +
                           " differs from the replayed " + after->to_string());
      }
    }

    bool strict = false;
    if (row.from && row.to) {
      if (row.cost_before && row.cost_after &&
          !(*row.cost_after < *row.cost_before)) {
        flag(row.step, "recorded move does not lower the mover's cost (" +
                           row.cost_before->to_string() + " -> " +
                           row.cost_after->to_string() + ")");
      }
      strict = *after < *before;
      if (!strict) {
        const bool infinite_swap = before->is_infinite() && after->is_infinite() &&
                                   player_cost_key(game_, state_, i) < *key_before;
        if (!infinite_swap) {
          flag(row.step, "move does not lower the mover's cost (" +
                             before->to_string() + " -> " + after->to_string() +
                             ")");
        }
      }
      const StrategySpace& space = game_.space(i);
      if (space.is_matroid() && !space.is_singleton_space()) {
        ResourceSet dropped;
        std::set_difference(row.from->begin(), row.from->end(), row.to->begin(),
                            row.to->end(), std::back_inserter(dropped));
        if (dropped.size() != 1) {
          flag(row.step, "matroid move swaps " + std::to_string(dropped.size()) +
                             " elements instead of one");
        }
      }
    }

    if (row.potential.empty()) return;
    std::optional<PotentialValue> pot_after = recompute(row, kind);
    if (!pot_after) {
      if (kind != "lex" && kind != "ins" && kind != "scalar") {
        flag(row.step, "unknown potential kind '" + kind + "'");
      }
      return;
    }
    if (potential_to_string(*pot_after) != row.potential) {
      flag(row.step, "recorded potential " + row.potential +
                         " differs from the replayed " +
                         potential_to_string(*pot_after));
    }
    if (kind == "ins") {
      round_end_ = std::get<InsertionPotential>(*pot_after);
      return;
    }
    if (!pot_before || !strict) return;
    if (kind == "lex") {
      const auto& a = std::get<LexVector>(*pot_before);
      const auto& b = std::get<LexVector>(*pot_after);
      if (lex_compare(b, a) != std::strong_ordering::less) {
        flag(row.step, "lexicographic potential did not decrease");
      }
    } else {
      const ExtCost& a = std::get<ExtCost>(*pot_before);
      const ExtCost& b = std::get<ExtCost>(*pot_after);
      if (a.is_finite() && b.is_finite() && before->is_finite() &&
          after->is_finite()) {
        if (Rational(b - a) != Rational(*after - *before)) {
          flag(row.step, "level potential changed by " +
                             rational_to_string(b - a) + " but the cost by " +
                             rational_to_string(*after - *before));
        }
      } else if (!(b < a) && !(a.is_infinite() && b.is_infinite())) {
        flag(row.step, "level potential did not decrease");
      }
    }
  }

  // An insertion round ends where the next begins; its potential must exceed
  // the previous round's and nobody placed may want to move.
  void close_round(int next_step) {
    if (!round_end_) {
      if (next_step >= 0) last_round_step_ = next_step;
      return;
    }
    if (round_start_) {
      try {
        if (insertion_potential_compare(*round_start_, *round_end_) !=
            std::strong_ordering::less) {
          flag(last_round_step_, "insertion potential did not increase");
        }
      } catch (const Error& err) {
        flag(last_round_step_, err.what());
      }
    }
    if (some_covered_player_can_improve(game_, state_)) {
      flag(last_round_step_, "a placed player can improve after the round");
    }
    round_start_ = round_end_;
    round_end_.reset();
    last_round_step_ = next_step;
  }

  void finish() {
    report_.complete = state_.is_full();
    if (!report_.complete) {
      flag(-1, "final state leaves players unplaced");
      return;
    }
    report_.final_profile = state_.to_profile();
    report_.final_pne = is_pure_nash(game_, report_.final_profile);
    if (!report_.final_pne) flag(-1, "final profile is not a pure Nash equilibrium");
  }

  const Game& game_;
  CertifyReport& report_;
  State state_;
  std::optional<InsertionPotential> round_start_;
  std::optional<InsertionPotential> round_end_;
  int last_round_step_ = 1;
};

}  // namespace

CertifyReport certify_trace(const Game& game, const MoveTrace& trace) {
  CertifyReport report;
  Replay(game, report).run(trace);
  return report;
}

}  // namespace pcg
