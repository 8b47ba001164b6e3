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

#include "pcg/io.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

namespace pcg {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              (where.empty() ? std::string() : where + ": ") + what);
}

void allow_keys(const json& obj, std::initializer_list<std::string_view> keys,
                const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      fail(where, "unknown field '" + key + "'");
    }
  }
}

const json& need(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string number_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "expected a rational string such as \"3/2\"");
}

Rational as_rational(const json& j, const std::string& where) {
  try {
    return parse_rational(number_text(j, where));
  } catch (const Error& err) {
    fail(where, err.what());
  }
}

ExtCost as_cost(const json& j, const std::string& where) {
  try {
    return ExtCost::parse(number_text(j, where));
  } catch (const Error& err) {
    fail(where, err.what());
  }
}

class Names {
 public:
  explicit Names(const std::vector<std::string>& names) {
    for (size_t e = 0; e < names.size(); ++e) {
      index_.emplace(names[e], static_cast<ResourceId>(e));
    }
  }
  ResourceId at(const std::string& name, const std::string& where) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(where, "unknown resource '" + name + "'");
    return it->second;
  }
  ResourceId at(const json& j, const std::string& where) const {
    return at(as_string(j, where), where);
  }
  ResourceSet set(const json& j, const std::string& where) const {
    ResourceSet out;
    for (const auto& r : as_array(j, where)) out.push_back(at(r, where));
    return make_set(std::move(out));
  }

 private:
  std::map<std::string, ResourceId> index_;
};

DelaySpec parse_delay(const json& j, const std::string& where) {
  const std::string kind = as_string(need(j, "kind", where), where + ".kind");
  if (kind == "table") {
    allow_keys(j, {"kind", "entries"}, where);
    const json& entries = as_array(need(j, "entries", where), where + ".entries");
    int bound = 0;
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != 3) {
        fail(where, "table entries are [x, y, value]");
      }
      bound = std::max(bound, as_int(row[0], where) + as_int(row[1], where));
    }
    TableDelay t(bound);
    for (const auto& row : entries) {
      const int x = as_int(row[0], where);
      const int y = as_int(row[1], where);
      if (x < 0 || y < 1) fail(where, "table entries need x >= 0 and y >= 1");
      if (t.has(x, y)) {
        fail(where, "duplicate table entry (x=" + std::to_string(x) +
                        ",y=" + std::to_string(y) + ")");
      }
      t.set(x, y, as_cost(row[2], where));
    }
    return t;
  }
  if (kind == "affine") {
    allow_keys(j, {"kind", "alpha", "beta"}, where);
    return AffineDelay{as_rational(need(j, "alpha", where), where + ".alpha"),
                       as_rational(need(j, "beta", where), where + ".beta")};
  }
  if (kind == "classic") {
    allow_keys(j, {"kind", "values"}, where);
    ClassicDelay c;
    for (const auto& v : as_array(need(j, "values", where), where + ".values")) {
      c.values.push_back(as_cost(v, where + ".values"));
    }
    return c;
  }
  fail(where, "unknown delay kind '" + kind + "'");
}

json delay_to_json(const DelaySpec& d) {
  if (const auto* t = std::get_if<TableDelay>(&d.variant())) {
    json entries = json::array();
    for (int x = 0; x < t->bound(); ++x) {
      for (int y = 1; x + y <= t->bound(); ++y) {
        if (t->has(x, y)) entries.push_back({x, y, t->at(x, y).to_string()});
      }
    }
    return {{"kind", "table"}, {"entries", entries}};
  }
  if (const auto* a = std::get_if<AffineDelay>(&d.variant())) {
    return {{"kind", "affine"},
            {"alpha", rational_to_string(a->alpha)},
            {"beta", rational_to_string(a->beta)}};
  }
  const auto& c = std::get<ClassicDelay>(d.variant());
  json values = json::array();
  for (const auto& v : c.values) values.push_back(v.to_string());
  return {{"kind", "classic"}, {"values", values}};
}

StrategySpace parse_space(const json& j, const Names& names,
                          const std::string& where) {
  const std::string kind = as_string(need(j, "kind", where), where + ".kind");
  if (kind == "singleton") {
    allow_keys(j, {"kind", "allowed"}, where);
    return StrategySpace::singleton(names.set(need(j, "allowed", where), where));
  }
  if (kind == "explicit" || kind == "bases") {
    const char* key = kind == "explicit" ? "sets" : "bases";
    allow_keys(j, {"kind", key}, where);
    std::vector<ResourceSet> sets;
    for (const auto& s : as_array(need(j, key, where), where)) {
      sets.push_back(names.set(s, where));
    }
    return kind == "explicit" ? StrategySpace::explicit_sets(std::move(sets))
                              : StrategySpace::explicit_bases(std::move(sets));
  }
  if (kind == "uniform") {
    allow_keys(j, {"kind", "ground", "rank"}, where);
    return StrategySpace::uniform(names.set(need(j, "ground", where), where),
                                  as_int(need(j, "rank", where), where));
  }
  if (kind == "partition") {
    allow_keys(j, {"kind", "blocks", "caps"}, where);
    std::vector<ResourceSet> blocks;
    for (const auto& b : as_array(need(j, "blocks", where), where)) {
      blocks.push_back(names.set(b, where));
    }
    std::vector<int> caps;
    for (const auto& c : as_array(need(j, "caps", where), where)) {
      caps.push_back(as_int(c, where));
    }
    return StrategySpace::partition(std::move(blocks), std::move(caps));
  }
  if (kind == "graphic") {
    allow_keys(j, {"kind", "edges"}, where);
    std::vector<GraphEdge> edges;
    for (const auto& e : as_array(need(j, "edges", where), where)) {
      if (!e.is_array() || e.size() != 3) fail(where, "edges are [u, v, resource]");
      edges.push_back({as_int(e[0], where), as_int(e[1], where),
                       names.at(e[2], where)});
    }
    return StrategySpace::graphic(std::move(edges));
  }
  fail(where, "unknown strategy kind '" + kind + "'");
}

json names_of(const ResourceSet& s, const std::vector<std::string>& names) {
  json out = json::array();
  for (ResourceId e : s) out.push_back(names[e]);
  return out;
}

json space_to_json(const StrategySpace& s, const std::vector<std::string>& names) {
  using Kind = StrategySpace::Kind;
  switch (s.kind()) {
    case Kind::kSingleton:
      return {{"kind", "singleton"}, {"allowed", names_of(s.ground(), names)}};
    case Kind::kExplicit:
    case Kind::kExplicitBases: {
      json sets = json::array();
      for (const auto& set : s.sets()) sets.push_back(names_of(set, names));
      const bool plain = s.kind() == Kind::kExplicit;
      return {{"kind", plain ? "explicit" : "bases"},
              {plain ? "sets" : "bases", sets}};
    }
    case Kind::kUniform:
      return {{"kind", "uniform"},
              {"ground", names_of(s.ground(), names)},
              {"rank", s.rank()}};
    case Kind::kPartition: {
      json blocks = json::array();
      for (const auto& b : s.blocks()) blocks.push_back(names_of(b, names));
      return {{"kind", "partition"}, {"blocks", blocks}, {"caps", s.caps()}};
    }
    case Kind::kGraphic: {
      json edges = json::array();
      for (const auto& e : s.edges()) edges.push_back({e.u, e.v, names[e.element]});
      return {{"kind", "graphic"}, {"edges", edges}};
    }
  }
  return {};
}

struct Common {
  int players = 0;
  std::vector<std::string> resources;
  std::vector<StrategySpace> spaces;
};

Common parse_common(const json& doc) {
  Common c;
  c.players = as_int(need(doc, "players", ""), "players");
  if (c.players < 1) fail("players", "need at least one player");
  for (const auto& r : as_array(need(doc, "resources", ""), "resources")) {
    c.resources.push_back(as_string(r, "resources"));
  }
  const Names names(c.resources);
  const json& strategies = as_array(need(doc, "strategies", ""), "strategies");
  if (static_cast<int>(strategies.size()) != c.players) {
    fail("strategies", "expected " + std::to_string(c.players) + " entries");
  }
  for (size_t i = 0; i < strategies.size(); ++i) {
    c.spaces.push_back(parse_space(strategies[i], names,
                                   "strategies[" + std::to_string(i + 1) + "]"));
  }
  return c;
}

std::vector<int> int_row(const json& j, const std::string& where) {
  std::vector<int> out;
  for (const auto& v : as_array(j, where)) out.push_back(as_int(v, where));
  return out;
}

PriorityFunction parse_priorities(const json& j, const Common& c) {
  if (j.contains("consistent")) {
    allow_keys(j, {"consistent"}, "priorities");
    return PriorityFunction::consistent(
        int_row(j["consistent"], "priorities.consistent"),
        static_cast<int>(c.resources.size()));
  }
  allow_keys(j, {"per_resource"}, "priorities");
  const json& per = need(j, "per_resource", "priorities");
  if (!per.is_object()) fail("priorities.per_resource", "expected an object");
  const Names names(c.resources);
  std::vector<std::vector<int>> rows(c.resources.size());
  for (const auto& [rid, row] : per.items()) {
    rows[names.at(rid, "priorities.per_resource")] =
        int_row(row, "priorities.per_resource." + rid);
  }
  return PriorityFunction::per_resource(std::move(rows));
}

json priorities_to_json(const PriorityFunction& p,
                        const std::vector<std::string>& names) {
  if (p.declared_consistent() && !p.rows().empty()) {
    return {{"consistent", p.rows().front()}};
  }
  json per = json::object();
  for (size_t e = 0; e < p.rows().size(); ++e) per[names[e]] = p.rows()[e];
  return {{"per_resource", per}};
}

// Resource-keyed map of delay objects. Missing resources stay nullopt.
std::vector<std::optional<DelaySpec>> parse_delay_map(const json& j,
                                                      const Names& names,
                                                      size_t m,
                                                      const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object keyed by resource");
  std::vector<std::optional<DelaySpec>> out(m);
  for (const auto& [rid, d] : j.items()) {
    out[names.at(rid, where)] = parse_delay(d, where + "." + rid);
  }
  return out;
}

json base_document(const std::string& model, int players,
                   const std::vector<std::string>& resources,
                   const std::vector<StrategySpace>& spaces) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["model"] = model;
  doc["players"] = players;
  doc["resources"] = resources;
  json strategies = json::array();
  for (const auto& s : spaces) strategies.push_back(space_to_json(s, resources));
  doc["strategies"] = strategies;
  return doc;
}

Game parse_priority_model(const json& doc) {
  allow_keys(doc, {"version", "model", "players", "resources", "priorities",
                   "delays", "player_specific", "strategies"},
             "");
  Common c = parse_common(doc);
  const size_t m = c.resources.size();
  const Names names(c.resources);
  GameSpec spec;
  spec.num_players = c.players;
  spec.priorities = parse_priorities(need(doc, "priorities", ""), c);
  std::vector<std::optional<DelaySpec>> shared(m);
  if (doc.contains("delays")) shared = parse_delay_map(doc["delays"], names, m, "delays");
  if (doc.contains("player_specific")) {
    spec.player_specific = true;
    const json& ps = doc["player_specific"];
    if (!ps.is_object()) fail("player_specific", "expected an object keyed by player");
    std::vector<std::vector<std::optional<DelaySpec>>> per(
        c.players, std::vector<std::optional<DelaySpec>>(m));
    for (const auto& [pid, map] : ps.items()) {
      int i = 0;
      try {
        i = std::stoi(pid);
      } catch (...) {
        fail("player_specific", "player ids are 1-based integers, got '" + pid + "'");
      }
      if (i < 1 || i > c.players || std::to_string(i) != pid) {
        fail("player_specific", "no player '" + pid + "'");
      }
      per[i - 1] = parse_delay_map(map, names, m, "player_specific." + pid);
    }
    for (int i = 0; i < c.players; ++i) {
      std::vector<DelaySpec> row;
      for (size_t e = 0; e < m; ++e) {
        if (per[i][e]) {
          row.push_back(*per[i][e]);
        } else if (shared[e]) {
          row.push_back(*shared[e]);
        } else {
          fail("player_specific." + std::to_string(i + 1),
               "no delay for resource '" + c.resources[e] + "'");
        }
      }
      spec.player_delays.push_back(std::move(row));
    }
  } else {
    for (size_t e = 0; e < m; ++e) {
      if (!shared[e]) fail("delays", "no delay for resource '" + c.resources[e] + "'");
      spec.delays.push_back(*shared[e]);
    }
  }
  spec.resources = std::move(c.resources);
  spec.strategy_spaces = std::move(c.spaces);
  return build_game(std::move(spec));
}

ClassicGame parse_classic_model(const json& doc) {
  allow_keys(doc, {"version", "model", "players", "resources", "priorities",
                   "delays", "strategies"},
             "");
  Common c = parse_common(doc);
  ClassicGame g;
  g.num_players = c.players;
  g.priorities = doc.contains("priorities")
                     ? parse_priorities(doc["priorities"], c)
                     : PriorityFunction::consistent(
                           std::vector<int>(c.players, 1),
                           static_cast<int>(c.resources.size()));
  const Names names(c.resources);
  auto delays = parse_delay_map(need(doc, "delays", ""), names,
                                c.resources.size(), "delays");
  for (size_t e = 0; e < delays.size(); ++e) {
    const auto* cd = delays[e] ? std::get_if<ClassicDelay>(&delays[e]->variant())
                               : nullptr;
    if (!cd) fail("delays." + c.resources[e], "classic models need classic delays");
    g.delays.push_back(cd->values);
  }
  g.resources = std::move(c.resources);
  g.strategy_spaces = std::move(c.spaces);
  return g;
}

AffineGame parse_affine_model(const json& doc) {
  allow_keys(doc, {"version", "model", "players", "resources", "priorities",
                   "delays", "strategies"},
             "");
  Common c = parse_common(doc);
  AffineGame g;
  g.num_players = c.players;
  const json& pj = need(doc, "priorities", "");
  allow_keys(pj, {"consistent"}, "priorities");
  g.priority = int_row(need(pj, "consistent", "priorities"), "priorities.consistent");
  const Names names(c.resources);
  auto delays = parse_delay_map(need(doc, "delays", ""), names,
                                c.resources.size(), "delays");
  for (size_t e = 0; e < delays.size(); ++e) {
    const auto* a = delays[e] ? std::get_if<AffineDelay>(&delays[e]->variant())
                              : nullptr;
    if (!a) fail("delays." + c.resources[e], "affine models need affine delays");
    g.alpha.push_back(a->alpha);
    g.beta.push_back(a->beta);
  }
  g.resources = std::move(c.resources);
  g.strategy_spaces = std::move(c.spaces);
  return g;
}

MarketGame parse_market_model(const json& doc) {
  allow_keys(doc, {"version", "model", "players", "resources", "costs",
                   "market_delays", "strategies"},
             "");
  Common c = parse_common(doc);
  const size_t m = c.resources.size();
  const Names names(c.resources);
  MarketSpec spec;
  spec.num_players = c.players;
  spec.costs.assign(c.players, std::vector<Rational>(m));
  const json& costs = need(doc, "costs", "");
  if (!costs.is_object()) fail("costs", "expected an object keyed by resource");
  std::vector<bool> seen(m, false);
  for (const auto& [rid, row] : costs.items()) {
    const ResourceId e = names.at(rid, "costs");
    const json& values = as_array(row, "costs." + rid);
    if (static_cast<int>(values.size()) != c.players) {
      fail("costs." + rid, "expected one cost per player");
    }
    for (int i = 0; i < c.players; ++i) {
      spec.costs[i][e] = as_rational(values[i], "costs." + rid);
    }
    seen[e] = true;
  }
  for (size_t e = 0; e < m; ++e) {
    if (!seen[e]) fail("costs", "no costs for resource '" + c.resources[e] + "'");
  }
  const auto levels = market_cost_levels(spec.costs, static_cast<int>(m));
  const json& delays = need(doc, "market_delays", "");
  if (!delays.is_object()) fail("market_delays", "expected an object keyed by resource");
  spec.delays.resize(m);
  std::vector<bool> have(m, false);
  for (const auto& [rid, d] : delays.items()) {
    const std::string where = "market_delays." + rid;
    const ResourceId e = names.at(rid, "market_delays");
    allow_keys(d, {"kind", "entries"}, where);
    if (as_string(need(d, "kind", where), where) != "table3") {
      fail(where, "market delays use kind 'table3'");
    }
    std::map<int, int> bounds;
    const json& entries = as_array(need(d, "entries", where), where);
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != 4) {
        fail(where, "entries are [level, x, y, value]");
      }
      const int k = as_int(row[0], where);
      if (k < 1) fail(where, "levels are 1-based cost ranks");
      bounds[k] = std::max(bounds[k], as_int(row[1], where) + as_int(row[2], where));
    }
    MarketDelay md;
    md.levels = levels[e];
    const int count = bounds.empty() ? 0 : bounds.rbegin()->first;
    for (int k = 1; k <= count; ++k) md.tables.emplace_back(bounds[k]);
    for (const auto& row : entries) {
      const int x = as_int(row[1], where);
      const int y = as_int(row[2], where);
      if (x < 0 || y < 1) fail(where, "entries need x >= 0 and y >= 1");
      TableDelay& t = md.tables[as_int(row[0], where) - 1];
      if (t.has(x, y)) fail(where, "duplicate entry");
      t.set(x, y, as_cost(row[3], where));
    }
    spec.delays[e] = std::move(md);
    have[e] = true;
  }
  for (size_t e = 0; e < m; ++e) {
    if (!have[e]) fail("market_delays", "no delay for resource '" + c.resources[e] + "'");
  }
  spec.resources = std::move(c.resources);
  spec.strategy_spaces = std::move(c.spaces);
  return build_market(std::move(spec));
}

json game_document(const Game& game) {
  const GameSpec& spec = game.spec();
  json doc = base_document("priority", spec.num_players, spec.resources,
                           spec.strategy_spaces);
  doc["priorities"] = priorities_to_json(spec.priorities, spec.resources);
  if (spec.player_specific) {
    json ps = json::object();
    for (int i = 0; i < spec.num_players; ++i) {
      json row = json::object();
      for (size_t e = 0; e < spec.resources.size(); ++e) {
        row[spec.resources[e]] = delay_to_json(spec.player_delays[i][e]);
      }
      ps[std::to_string(i + 1)] = row;
    }
    doc["player_specific"] = ps;
  } else {
    json delays = json::object();
    for (size_t e = 0; e < spec.resources.size(); ++e) {
      delays[spec.resources[e]] = delay_to_json(spec.delays[e]);
    }
    doc["delays"] = delays;
  }
  return doc;
}

json market_document(const MarketGame& market) {
  const MarketSpec& spec = market.spec();
  json doc = base_document("market", spec.num_players, spec.resources,
                           spec.strategy_spaces);
  json costs = json::object();
  json delays = json::object();
  for (size_t e = 0; e < spec.resources.size(); ++e) {
    json row = json::array();
    for (int i = 0; i < spec.num_players; ++i) {
      row.push_back(rational_to_string(spec.costs[i][e]));
    }
    costs[spec.resources[e]] = row;
    json entries = json::array();
    const MarketDelay& d = spec.delays[e];
    for (size_t k = 0; k < d.tables.size(); ++k) {
      const TableDelay& t = d.tables[k];
      for (int x = 0; x < t.bound(); ++x) {
        for (int y = 1; x + y <= t.bound(); ++y) {
          if (t.has(x, y)) {
            entries.push_back({static_cast<int>(k + 1), x, y, t.at(x, y).to_string()});
          }
        }
      }
    }
    delays[spec.resources[e]] = {{"kind", "table3"}, {"entries", entries}};
  }
  doc["costs"] = costs;
  doc["market_delays"] = delays;
  return doc;
}

json classic_document(const ClassicGame& g) {
  json doc = base_document("classic", g.num_players, g.resources, g.strategy_spaces);
  doc["priorities"] = priorities_to_json(g.priorities, g.resources);
  json delays = json::object();
  for (size_t e = 0; e < g.resources.size(); ++e) {
    delays[g.resources[e]] = delay_to_json(ClassicDelay{g.delays[e]});
  }
  doc["delays"] = delays;
  return doc;
}

json affine_document(const AffineGame& g) {
  json doc = base_document("affine", g.num_players, g.resources, g.strategy_spaces);
  doc["priorities"] = {{"consistent", g.priority}};
  json delays = json::object();
  for (size_t e = 0; e < g.resources.size(); ++e) {
    delays[g.resources[e]] = delay_to_json(AffineDelay{g.alpha[e], g.beta[e]});
  }
  doc["delays"] = delays;
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw Error(ErrorCode::kParseError,
                "malformed JSON at byte " + std::to_string(err.byte));
  }
  if (!doc.is_object()) fail("", "an instance is a JSON object");
  const int version = as_int(need(doc, "version", ""), "version");
  if (version != kFormatVersion) {
    fail("version", "unsupported version " + std::to_string(version));
  }
  const std::string model = as_string(need(doc, "model", ""), "model");
  try {
    if (model == "priority") return {model, parse_priority_model(doc)};
    if (model == "market") return {model, parse_market_model(doc)};
    if (model == "classic") {
      ClassicGame g = parse_classic_model(doc);
      reduce_classic_to_priority(g);  // validates
      return {model, std::move(g)};
    }
    if (model == "affine") {
      AffineGame g = parse_affine_model(doc);
      if (static_cast<int>(g.priority.size()) != g.num_players) {
        throw Error(ErrorCode::kValidationFailed,
                    "priorities: expected one consistent value per player",
                    {{"priorities", "missing priority entry"}});
      }
      reduce_affine_to_priority(g);
      return {model, std::move(g)};
    }
  } catch (const json::exception& err) {
    fail("", err.what());
  }
  fail("model", "unknown model '" + model + "'");
}

std::string emit_instance(const Instance& instance) {
  return std::visit(
      [](const auto& body) -> std::string {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, Game>) return dump(game_document(body));
        if constexpr (std::is_same_v<T, MarketGame>) return dump(market_document(body));
        if constexpr (std::is_same_v<T, ClassicGame>) return dump(classic_document(body));
        if constexpr (std::is_same_v<T, AffineGame>) return dump(affine_document(body));
      },
      instance.body);
}

std::string emit_game(const Game& game) { return dump(game_document(game)); }
std::string emit_market(const MarketGame& market) {
  return dump(market_document(market));
}

Game instance_game(const Instance& instance) {
  return std::visit(
      [](const auto& body) -> Game {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, Game>) return body;
        if constexpr (std::is_same_v<T, MarketGame>) {
          return reduce_market_to_playerspecific(body);
        }
        if constexpr (std::is_same_v<T, ClassicGame>) {
          return reduce_classic_to_priority(body);
        }
        if constexpr (std::is_same_v<T, AffineGame>) {
          return reduce_affine_to_priority(body);
        }
      },
      instance.body);
}

Profile parse_profile_json(const Game& game, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw Error(ErrorCode::kParseError,
                "malformed profile JSON at byte " + std::to_string(err.byte));
  }
  if (!doc.is_object()) fail("profile", "expected an object keyed by player");
  const Names names(game.spec().resources);
  Profile profile(game.num_players());
  std::vector<bool> seen(game.num_players(), false);
  for (const auto& [pid, value] : doc.items()) {
    int i = 0;
    try {
      i = std::stoi(pid);
    } catch (...) {
      fail("profile", "player ids are 1-based integers, got '" + pid + "'");
    }
    if (i < 1 || i > game.num_players() || std::to_string(i) != pid) {
      fail("profile", "no player '" + pid + "'");
    }
    ResourceSet s = value.is_string()
                        ? ResourceSet{names.at(value, "profile." + pid)}
                        : names.set(value, "profile." + pid);
    if (!game.space(i - 1).is_base(s)) {
      throw Error(ErrorCode::kValidationFailed,
                  "profile: not a strategy of player " + pid,
                  {{"profile." + pid, "not a strategy of this player"}});
    }
    profile[i - 1] = std::move(s);
    seen[i - 1] = true;
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (!seen[i]) fail("profile", "no strategy for player " + std::to_string(i + 1));
  }
  return profile;
}

std::string profile_to_json(const Game& game, const Profile& profile) {
  json doc = json::object();
  for (size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].size() == 1) {
      doc[std::to_string(i + 1)] = game.resource_name(profile[i].front());
    } else {
      doc[std::to_string(i + 1)] = names_of(profile[i], game.spec().resources);
    }
  }
  return doc.dump();
}

std::string format_set(const Game& game, const std::optional<ResourceSet>& s,
                       std::string_view empty_text) {
  if (!s) return std::string(empty_text);
  std::string out;
  for (ResourceId e : *s) {
    if (!out.empty()) out += "+";
    out += game.resource_name(e);
  }
  return out;
}

namespace {

constexpr std::string_view kTraceHeader =
    "step,phase,player,from,to,cost_before,cost_after,potential";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(std::string_view line, int line_no) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        out.back() += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) fail("trace line " + std::to_string(line_no), "unterminated quote");
  return out;
}

std::optional<ResourceSet> parse_trace_set(const Game& game, const std::string& text,
                                           std::string_view empty_text,
                                           const std::string& where) {
  if (text == empty_text) return std::nullopt;
  ResourceSet out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t plus = text.find('+', start);
    const std::string name = text.substr(start, plus - start);
    auto e = game.find_resource(name);
    if (!e) fail(where, "unknown resource '" + name + "'");
    out.push_back(*e);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return make_set(std::move(out));
}

std::optional<ExtCost> parse_trace_cost(const std::string& text,
                                        const std::string& where) {
  if (text.empty()) return std::nullopt;
  try {
    return ExtCost::parse(text);
  } catch (const Error& err) {
    fail(where, err.what());
  }
}

}  // namespace

void write_trace_csv(std::ostream& out, const Game& game, const MoveTrace& trace) {
  out << kTraceHeader << "\n";
  for (const Step& s : trace.steps) {
    out << s.step << ',' << csv_field(s.phase) << ',' << s.player + 1 << ','
        << csv_field(format_set(game, s.from, "NONE")) << ','
        << csv_field(format_set(game, s.to, "DISCARDED")) << ','
        << (s.cost_before ? s.cost_before->to_string() : "") << ','
        << (s.cost_after ? s.cost_after->to_string() : "") << ','
        << csv_field(s.potential) << "\n";
  }
}

MoveTrace parse_trace_csv(const Game& game, std::string_view text) {
  MoveTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != kTraceHeader) fail("trace line 1", "unexpected header");
      header = true;
      continue;
    }
    const std::string where = "trace line " + std::to_string(line_no);
    const auto f = csv_split(line, line_no);
    if (f.size() != 8) fail(where, "expected 8 fields, got " + std::to_string(f.size()));
    Step s;
    try {
      s.step = std::stoi(f[0]);
      s.player = std::stoi(f[2]) - 1;
    } catch (...) {
      fail(where, "step and player are integers");
    }
    s.phase = f[1];
    s.from = parse_trace_set(game, f[3], "NONE", where);
    s.to = parse_trace_set(game, f[4], "DISCARDED", where);
    s.cost_before = parse_trace_cost(f[5], where);
    s.cost_after = parse_trace_cost(f[6], where);
    s.potential = f[7];
    trace.steps.push_back(std::move(s));
  }
  if (!header) fail("trace", "empty trace file");
  return trace;
}

}  // namespace pcg
