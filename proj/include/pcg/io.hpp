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

#ifndef PCG_IO_HPP_
#define PCG_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "pcg/dynamics.hpp"
#include "pcg/markets.hpp"
#include "pcg/model.hpp"

namespace pcg {

/// A parsed instance file; `model` is the file's "model" field.
struct Instance {
  std::string model;
  std::variant<Game, MarketGame, ClassicGame, AffineGame> body;
};

/// Parses and validates an instance document. Throws Error(kParseError) for
/// malformed JSON (with the byte offset), unknown keys or bad rationals, and
/// Error(kValidationFailed) with diagnostics for semantic problems.
Instance parse_instance(std::string_view text);

/// Canonical form: sorted keys, two-space indent, rationals as "p/q".
std::string emit_instance(const Instance& instance);
std::string emit_game(const Game& game);
std::string emit_market(const MarketGame& market);

/// The instance as a priority-based game: classic and affine files are
/// reduced, markets become player-specific games.
Game instance_game(const Instance& instance);

/// `{"1": "a", "2": ["b", "c"]}`: 1-based player ids to resource ids.
Profile parse_profile_json(const Game& game, std::string_view text);
std::string profile_to_json(const Game& game, const Profile& profile);

/// "a+c" with resource ids; empty optional as `empty_text`.
std::string format_set(const Game& game, const std::optional<ResourceSet>& s,
                       std::string_view empty_text);

void write_trace_csv(std::ostream& out, const Game& game, const MoveTrace& trace);
/// Throws Error(kParseError) naming the offending line.
MoveTrace parse_trace_csv(const Game& game, std::string_view text);

}  // namespace pcg

#endif  // PCG_IO_HPP_
