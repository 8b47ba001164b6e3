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

#include "pcg/model.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace pcg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string point(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

TableDelay::TableDelay(int bound) : bound_(std::max(bound, 0)) {
  cells_.resize(static_cast<size_t>(bound_) * (bound_ + 1) / 2);
}

TableDelay TableDelay::from_function(
    int bound, const std::function<ExtCost(int, int)>& fn) {
  TableDelay t(bound);
  for (int s = 1; s <= bound; ++s) {
    for (int x = 0; x < s; ++x) t.set(x, s - x, fn(x, s - x));
  }
  return t;
}

// Anti-diagonal s = x + y holds s cells; cells before it number s(s-1)/2.
size_t TableDelay::index(int x, int y) const {
  const size_t s = static_cast<size_t>(x + y);
  return s * (s - 1) / 2 + static_cast<size_t>(x);
}

void TableDelay::set(int x, int y, ExtCost value) {
  if (!in_domain(x, y)) {
    throw Error(ErrorCode::kOutOfBound,
                "table point " + point(x, y) + " outside bound " +
                    std::to_string(bound_));
  }
  cells_[index(x, y)] = std::move(value);
}

bool TableDelay::has(int x, int y) const {
  return in_domain(x, y) && cells_[index(x, y)].has_value();
}

const ExtCost& TableDelay::at(int x, int y) const {
  if (!in_domain(x, y)) {
    throw Error(ErrorCode::kOutOfBound,
                "delay argument " + point(x, y) + " exceeds table bound " +
                    std::to_string(bound_));
  }
  const auto& cell = cells_[index(x, y)];
  if (!cell) {
    throw Error(ErrorCode::kOutOfBound,
                "delay table has no entry at " + point(x, y));
  }
  return *cell;
}

std::vector<std::pair<int, int>> TableDelay::missing() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= bound_; ++s) {
    for (int x = 0; x < s; ++x) {
      if (!has(x, s - x)) out.emplace_back(x, s - x);
    }
  }
  return out;
}

std::optional<int> DelaySpec::bound() const {
  return std::visit(
      Overloaded{
          [](const TableDelay& t) -> std::optional<int> { return t.bound(); },
          [](const AffineDelay&) -> std::optional<int> { return std::nullopt; },
          [](const ClassicDelay& c) -> std::optional<int> {
            return static_cast<int>(c.values.size());
          },
      },
      impl_);
}

ExtCost evaluate_delay(const DelaySpec& d, int x, int y) {
  if (x < 0 || y < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "delay needs x >= 0 and y >= 1, got " + point(x, y));
  }
  return std::visit(
      Overloaded{
          [&](const TableDelay& t) { return t.at(x, y); },
          [&](const AffineDelay& a) {
            Rational v = a.alpha * (Rational(x) + make_rational(y + 1, 2)) + a.beta;
            return ExtCost(std::move(v));
          },
          [&](const ClassicDelay& c) {
            if (y > static_cast<int>(c.values.size())) {
              throw Error(ErrorCode::kOutOfBound,
                          "classic delay has no value for y = " +
                              std::to_string(y));
            }
            return x >= 1 ? ExtCost::infinity() : c.values[y - 1];
          },
      },
      d.variant());
}

std::string_view axiom_name(DelayAxiom axiom) {
  switch (axiom) {
    case DelayAxiom::kMonotoneX: return "monotone-x";
    case DelayAxiom::kMonotoneY: return "monotone-y";
    case DelayAxiom::kReplacement: return "replacement";
  }
  return "?";
}

std::string DelayViolation::describe() const {
  return std::string(axiom_name(axiom)) + " violated at " + point(x, y) +
         ": d" + point(x, y) + "=" + lhs.to_string() + " > d" +
         point(x2, y2) + "=" + rhs.to_string();
}

std::vector<DelayViolation> validate_delay_properties(const DelaySpec& d,
                                                      int bound) {
  if (bound < 1) {
    throw Error(ErrorCode::kInvalidArgument, "validation bound must be >= 1");
  }
  std::vector<DelayViolation> out;
  auto check = [&](DelayAxiom axiom, int x, int y, int x2, int y2) {
    ExtCost lhs = evaluate_delay(d, x, y);
    ExtCost rhs = evaluate_delay(d, x2, y2);
    if (lhs > rhs) out.push_back({axiom, x, y, x2, y2, lhs, rhs});
  };
  for (int s = 1; s <= bound; ++s) {
    for (int x = 0; x < s; ++x) {
      const int y = s - x;
      if (s + 1 <= bound) {
        check(DelayAxiom::kMonotoneX, x, y, x + 1, y);
        check(DelayAxiom::kMonotoneY, x, y, x, y + 1);
      }
      if (y > 1) check(DelayAxiom::kReplacement, x, y, x + y - 1, 1);
    }
  }
  return out;
}

PriorityFunction PriorityFunction::consistent(std::vector<int> per_player,
                                              int num_resources) {
  PriorityFunction p;
  p.rows_.assign(static_cast<size_t>(std::max(num_resources, 0)), per_player);
  p.declared_consistent_ = true;
  return p;
}

PriorityFunction PriorityFunction::per_resource(
    std::vector<std::vector<int>> rows) {
  PriorityFunction p;
  p.rows_ = std::move(rows);
  return p;
}

bool PriorityFunction::is_consistent() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const auto& row) { return row == rows_.front(); });
}

std::optional<ResourceId> Game::find_resource(std::string_view name) const {
  for (size_t e = 0; e < spec_.resources.size(); ++e) {
    if (spec_.resources[e] == name) return static_cast<ResourceId>(e);
  }
  return std::nullopt;
}

bool Game::all_singleton() const {
  return std::all_of(spec_.strategy_spaces.begin(),
                     spec_.strategy_spaces.end(),
                     [](const StrategySpace& s) {
                       return s.is_singleton_space();
                     });
}

namespace {

// Bound the axioms are checked to, and the bound every reachable argument
// needs: no profile puts more than n players on one resource.
void check_delay(const DelaySpec& d, int n, const std::string& where,
                 std::vector<Diagnostic>& out) {
  if (const auto* t = std::get_if<TableDelay>(&d.variant())) {
    for (auto [x, y] : t->missing()) {
      out.push_back({where, "missing table entry (x=" + std::to_string(x) +
                                ",y=" + std::to_string(y) + ")"});
    }
    if (!t->missing().empty()) return;
  }
  if (const auto* a = std::get_if<AffineDelay>(&d.variant())) {
    if (sgn(a->alpha) < 0 || sgn(a->beta) < 0) {
      out.push_back({where, "affine alpha and beta must be nonnegative"});
      return;
    }
  }
  if (const auto* c = std::get_if<ClassicDelay>(&d.variant())) {
    if (c->values.empty()) {
      out.push_back({where, "classic delay has no values"});
      return;
    }
  }
  const std::optional<int> bound = d.bound();
  if (bound && *bound < n) {
    out.push_back({where, "delay bound " + std::to_string(*bound) +
                              " is smaller than the required " +
                              std::to_string(n)});
    return;
  }
  const int check_to = std::max(bound.value_or(std::max(n, 2)), 1);
  for (const auto& v : validate_delay_properties(d, check_to)) {
    out.push_back({where, v.describe()});
  }
}

}  // namespace

std::vector<Diagnostic> check_game(const GameSpec& spec) {
  std::vector<Diagnostic> out;
  const int n = spec.num_players;
  const int m = static_cast<int>(spec.resources.size());
  if (n < 1) out.push_back({"players", "a game needs at least one player"});
  if (m < 1) out.push_back({"resources", "a game needs at least one resource"});
  {
    std::set<std::string> seen;
    for (const auto& r : spec.resources) {
      if (!seen.insert(r).second) {
        out.push_back({"resources", "duplicate resource id '" + r + "'"});
      }
    }
  }
  if (static_cast<int>(spec.strategy_spaces.size()) != n) {
    out.push_back({"strategies", "expected one strategy space per player"});
  } else {
    for (int i = 0; i < n; ++i) {
      const std::string where = "strategies[" + std::to_string(i + 1) + "]";
      const auto& space = spec.strategy_spaces[i];
      for (const auto& d : space.validate()) out.push_back({where, d.message});
      for (ResourceId e : space.ground()) {
        if (e < 0 || e >= m) {
          out.push_back({where, "unknown resource index " + std::to_string(e)});
        }
      }
    }
  }
  const auto& rows = spec.priorities.rows();
  if (static_cast<int>(rows.size()) != m) {
    out.push_back({"priorities", "expected one priority map per resource"});
  } else {
    for (int e = 0; e < m; ++e) {
      const std::string where = "priorities." + spec.resources[e];
      if (static_cast<int>(rows[e].size()) != n) {
        out.push_back({where, "missing priority entry: expected " +
                                  std::to_string(n) + " values, got " +
                                  std::to_string(rows[e].size())});
        continue;
      }
      for (int i = 0; i < n; ++i) {
        if (rows[e][i] < 1) {
          out.push_back({where, "priority of player " + std::to_string(i + 1) +
                                    " must be >= 1"});
        }
      }
    }
  }
  if (spec.player_specific) {
    if (static_cast<int>(spec.player_delays.size()) != n) {
      out.push_back({"player_specific", "expected delays for every player"});
    } else {
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(spec.player_delays[i].size()) != m) {
          out.push_back({"player_specific." + std::to_string(i + 1),
                         "expected one delay per resource"});
          continue;
        }
        for (int e = 0; e < m; ++e) {
          check_delay(spec.player_delays[i][e], n,
                      "player_specific." + std::to_string(i + 1) + "." +
                          spec.resources[e],
                      out);
        }
      }
    }
  } else if (static_cast<int>(spec.delays.size()) != m) {
    out.push_back({"delays", "expected one delay per resource"});
  } else {
    for (int e = 0; e < m; ++e) {
      check_delay(spec.delays[e], n, "delays." + spec.resources[e], out);
    }
  }
  return out;
}

Game build_game(GameSpec spec) {
  auto diagnostics = check_game(spec);
  if (!diagnostics.empty()) {
    std::string msg = "game validation failed: " + diagnostics.front().where +
                      ": " + diagnostics.front().message;
    if (diagnostics.size() > 1) {
      msg += " (+" + std::to_string(diagnostics.size() - 1) + " more)";
    }
    throw Error(ErrorCode::kValidationFailed, std::move(msg),
                std::move(diagnostics));
  }
  return Game(std::move(spec));
}

}  // namespace pcg
