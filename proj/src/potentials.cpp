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

#include "pcg/potentials.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pcg {

namespace {

void require_blocks_sorted(const LexVector& block, ResourceId e) {
  if (!std::is_sorted(block.begin(), block.end())) {
    throw Error(ErrorCode::kInvariantViolated,
                "potential block of resource " + std::to_string(e + 1) +
                    " is not nondecreasing");
  }
}

void require_singleton(bool ok) {
  if (!ok) {
    throw Error(ErrorCode::kNotSingleton,
                "this potential is defined for singleton games only");
  }
}

int consistent_priority(const Game& game, PlayerId i) {
  return game.num_resources() == 0 ? 1 : game.priority(0, i);
}

}  // namespace

LexVector lex_potential(const Game& game, const Profile& profile) {
  if (game.player_specific()) {
    throw Error(ErrorCode::kPlayerSpecificInput,
                "the lexicographic potential needs shared delays");
  }
  const State state = State::from_profile(profile);
  LexVector out;
  for (ResourceId e = 0; e < game.num_resources(); ++e) {
    const CongestionView view = congestion_view(game, state, e);
    LexVector block;
    int above = 0;
    for (const auto& [q, count] : view.levels) {
      for (int y = 1; y <= count; ++y) {
        block.push_back({game.eval(0, e, above, y), q});
      }
      above += count;
    }
    require_blocks_sorted(block, e);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

LexVector lex_potential_singleton(const Game& game, const Profile& profile) {
  require_singleton(game.all_singleton());
  return lex_potential(game, profile);
}

std::strong_ordering lex_compare(const LexVector& a, const LexVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "lexicographic potentials of lengths " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::pair<State, State> split_at_level(const Game& game, const State& state,
                                       int q) {
  State outer(state.num_players());
  State inner(state.num_players());
  for (PlayerId i : state.covered()) {
    const int p = consistent_priority(game, i);
    if (p < q) outer.place(i, state.strategy(i));
    if (p == q) inner.place(i, state.strategy(i));
  }
  return {std::move(outer), std::move(inner)};
}

ExtCost level_potential(const Game& game, const State& outer, int q,
                        const State& inner) {
  if (game.player_specific()) {
    throw Error(ErrorCode::kPlayerSpecificInput,
                "the level potential needs shared delays");
  }
  if (!game.priorities().is_consistent()) {
    throw Error(ErrorCode::kInconsistentPriorities,
                "the level potential needs consistent priorities");
  }
  for (PlayerId i : outer.covered()) {
    if (consistent_priority(game, i) >= q) {
      throw Error(ErrorCode::kLevelMismatch,
                  "outer state covers player " + std::to_string(i + 1) +
                      " at level " + std::to_string(consistent_priority(game, i)));
    }
  }
  for (PlayerId i : inner.covered()) {
    if (consistent_priority(game, i) != q) {
      throw Error(ErrorCode::kLevelMismatch,
                  "inner state covers player " + std::to_string(i + 1) +
                      " at level " + std::to_string(consistent_priority(game, i)));
    }
  }
  ExtCost total;
  for (ResourceId e = 0; e < game.num_resources(); ++e) {
    const int fixed = congestion_view(game, outer, e).total;
    const int mine = congestion_view(game, inner, e).total;
    for (int k = 1; k <= mine; ++k) total += game.eval(0, e, fixed, k);
  }
  return total;
}

LexVector market_lex_potential(const MarketGame& market,
                               const Profile& profile) {
  require_singleton(market.all_singleton());
  LexVector out;
  for (ResourceId e = 0; e < market.num_resources(); ++e) {
    const MarketDelay& d = market.delay(e);
    std::map<int, int> by_rank;
    for (int j = 0; j < market.num_players(); ++j) {
      if (contains(profile.at(j), e)) ++by_rank[d.rank_of(market.cost(j, e))];
    }
    LexVector block;
    int above = 0;
    for (const auto& [rank, count] : by_rank) {
      for (int y = 1; y <= count; ++y) {
        block.push_back({d.tables[rank - 1].at(above, y), rank});
      }
      above += count;
    }
    require_blocks_sorted(block, e);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int tolerance(const Game& game, const State& state, PlayerId i) {
  require_singleton(game.space(i).is_singleton_space());
  const ResourceId e = state.strategy(i).front();
  const Weights w = entry_weights(game, state, i);
  ExtCost limit = ExtCost::infinity();
  bool constrained = false;
  for (ResourceId alt : game.space(i).ground()) {
    if (alt == e) continue;
    if (!constrained || w[alt] < limit) limit = w[alt];
    constrained = true;
  }
  const int above = congestion_view(game, state, e).below(game.priority(e, i));
  const int cap = game.num_players() - above;
  int tol = 0;
  for (int y = 1; y <= cap; ++y) {
    if (constrained && game.eval(i, e, above, y) > limit) break;
    tol = y;
  }
  return tol;
}

InsertionPotential insertion_potential(const Game& game, const State& state) {
  require_singleton(game.all_singleton());
  InsertionPotential out;
  for (ResourceId e = 0; e < game.num_resources(); ++e) {
    int top = 1;
    for (int i = 0; i < game.num_players(); ++i) {
      top = std::max(top, game.priority(e, i));
    }
    std::vector<int> row(static_cast<size_t>(top), 0);
    const CongestionView view = congestion_view(game, state, e);
    for (const auto& [q, count] : view.levels) row[q - 1] = count;
    out.phi.push_back(std::move(row));
  }
  std::sort(out.phi.begin(), out.phi.end());
  for (PlayerId i : state.covered()) out.tol_sum += tolerance(game, state, i);
  return out;
}

std::strong_ordering insertion_potential_compare(const InsertionPotential& a,
                                                 const InsertionPotential& b) {
  auto shape = [](const InsertionPotential& p) {
    std::vector<size_t> lengths;
    for (const auto& row : p.phi) lengths.push_back(row.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  };
  if (shape(a) != shape(b)) {
    throw Error(ErrorCode::kShapeMismatch,
                "insertion potentials come from differently shaped games");
  }
  if (auto c = a.phi <=> b.phi; c != 0) return c;
  return a.tol_sum <=> b.tol_sum;
}

namespace {

std::string lex_to_string(const LexVector& v) {
  std::string out = "lex:";
  for (const auto& p : v) {
    out += "(" + p.cost.to_string() + "@" + std::to_string(p.level) + ")";
  }
  return out;
}

std::string insertion_to_string(const InsertionPotential& p) {
  std::string out = "ins:[";
  for (size_t r = 0; r < p.phi.size(); ++r) {
    if (r > 0) out += "|";
    for (size_t k = 0; k < p.phi[r].size(); ++k) {
      if (k > 0) out += " ";
      out += std::to_string(p.phi[r][k]);
    }
  }
  return out + "]#" + std::to_string(p.tol_sum);
}

[[noreturn]] void bad_potential(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "malformed potential '" + std::string(text) + "'");
}

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) bad_potential(whole);
  int v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') bad_potential(whole);
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

std::string potential_to_string(const PotentialValue& value) {
  if (const auto* s = std::get_if<ExtCost>(&value)) {
    return "scalar:" + s->to_string();
  }
  if (const auto* l = std::get_if<LexVector>(&value)) return lex_to_string(*l);
  return insertion_to_string(std::get<InsertionPotential>(value));
}

PotentialValue parse_potential(std::string_view text) {
  if (text.starts_with("scalar:")) return ExtCost::parse(text.substr(7));
  if (text.starts_with("lex:")) {
    LexVector v;
    std::string_view rest = text.substr(4);
    while (!rest.empty()) {
      if (rest.front() != '(') bad_potential(text);
      const size_t close = rest.find(')');
      const size_t at = rest.find('@');
      if (close == std::string_view::npos || at == std::string_view::npos ||
          at > close) {
        bad_potential(text);
      }
      v.push_back({ExtCost::parse(rest.substr(1, at - 1)),
                   parse_int(rest.substr(at + 1, close - at - 1), text)});
      rest = rest.substr(close + 1);
    }
    return v;
  }
  if (text.starts_with("ins:[")) {
    const size_t close = text.find("]#");
    if (close == std::string_view::npos) bad_potential(text);
    InsertionPotential p;
    std::string_view rows = text.substr(5, close - 5);
    p.tol_sum = parse_int(text.substr(close + 2), text);
    while (!rows.empty()) {
      const size_t bar = rows.find('|');
      std::string_view row = rows.substr(0, bar);
      std::vector<int> values;
      while (!row.empty()) {
        const size_t sp = row.find(' ');
        values.push_back(parse_int(row.substr(0, sp), text));
        row = sp == std::string_view::npos ? std::string_view{} : row.substr(sp + 1);
      }
      p.phi.push_back(std::move(values));
      rows = bar == std::string_view::npos ? std::string_view{} : rows.substr(bar + 1);
    }
    return p;
  }
  bad_potential(text);
}

}  // namespace pcg
