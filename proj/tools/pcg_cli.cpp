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

// pcg: validate, solve, verify, reduce and generate priority-based
// congestion game instances.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcg/dynamics.hpp"
#include "pcg/generator.hpp"
#include "pcg/io.hpp"
#include "pcg/markets.hpp"
#include "pcg/oracle.hpp"

namespace {

using nlohmann::json;
using namespace pcg;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitExhausted = 2;

struct Output {
  bool as_json = false;
  bool approx = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

json cost_json(const ExtCost& c, const Output& o) {
  if (!o.approx) return c.to_string();
  return {{"exact", c.to_string()}, {"approx", c.approx()}};
}

std::string cost_text(const ExtCost& c, const Output& o) {
  if (!o.approx || c.is_infinite()) return c.to_string();
  std::ostringstream s;
  s << c.to_string() << " (~" << c.approx() << ")";
  return s.str();
}

int report_error(const Error& err, const Output& o) {
  const bool exhausted = err.code() == ErrorCode::kBudgetExceeded ||
                         err.code() == ErrorCode::kLayerCapExhausted;
  if (o.as_json) {
    json diags = json::array();
    for (const auto& d : err.diagnostics()) {
      diags.push_back({{"where", d.where}, {"message", d.message}});
    }
    std::cout << json{{"ok", false},
                      {"error", std::string(error_code_name(err.code()))},
                      {"message", err.what()},
                      {"diagnostics", diags}}
                     .dump(2)
              << "\n";
  } else {
    std::cerr << "error: " << error_code_name(err.code()) << ": " << err.what()
              << "\n";
    for (const auto& d : err.diagnostics()) {
      std::cerr << "  " << d.where << ": " << d.message << "\n";
    }
  }
  return exhausted ? kExitExhausted : kExitInvalid;
}

int cmd_validate(const std::string& file, const Output& o) {
  const Instance inst = parse_instance(read_file(file));
  const Game game = instance_game(inst);
  if (o.as_json) {
    std::cout << json{{"ok", true},
                      {"model", inst.model},
                      {"players", game.num_players()},
                      {"resources", game.num_resources()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "valid " << inst.model << " instance: " << game.num_players()
              << " players, " << game.num_resources() << " resources\n";
  }
  return kExitOk;
}

struct SolveArgs {
  std::string file;
  std::string method = "layered";
  std::string policy = "roundrobin";
  long max_steps = 100000;
  std::string trace_path;
  std::string start;
  bool repair = false;
};

Profile default_start(const Game& game) {
  Profile p;
  for (int i = 0; i < game.num_players(); ++i) {
    const Weights zero(game.num_resources(), ExtCost(0));
    p.push_back(greedy_min_base(game.space(i), zero));
  }
  return p;
}

Profile read_profile(const Game& game, const std::string& arg) {
  const bool inline_json = !arg.empty() && arg.front() == '{';
  return parse_profile_json(game, inline_json ? arg : read_file(arg));
}

int cmd_solve(const SolveArgs& a, const Output& o) {
  const Game game = instance_game(parse_instance(read_file(a.file)));
  SolveResult result;
  bool exhausted = false;
  if (a.method == "layered") {
    result = solve_consistent_layered(game);
  } else if (a.method == "insertion") {
    InsertionOptions options;
    options.repair = a.repair;
    options.max_rounds = a.max_steps;
    result = solve_insertion(game, options);
    exhausted = result.trace.status == RunStatus::kCapReached;
  } else if (a.method == "br") {
    Policy policy = Policy::kRoundRobin;
    if (a.policy == "first") policy = Policy::kFirstImprover;
    if (a.policy == "best") policy = Policy::kBestImprover;
    const Profile start = a.start.empty() ? default_start(game) : read_profile(game, a.start);
    result = run_dynamics(game, start, policy, a.max_steps);
    exhausted = result.trace.status == RunStatus::kCapReached;
  } else {
    EnumerationBudget budget = EnumerationBudget::from_env();
    const auto all = brute_force_pne(game, budget);
    if (all.empty()) {
      std::cerr << "no pure Nash equilibrium exists\n";
      return kExitInvalid;
    }
    result.profile = all.front();
  }

  if (!a.trace_path.empty()) {
    std::ofstream out(a.trace_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + a.trace_path + "'");
    write_trace_csv(out, game, result.trace);
  }
  for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << "\n";

  if (exhausted) {
    std::cerr << "step cap reached before an equilibrium\n";
    return kExitExhausted;
  }
  const bool pne = is_pure_nash(game, result.profile);
  const StepStats stats = count_steps(result.trace);
  if (o.as_json) {
    json costs = json::object();
    for (int i = 0; i < game.num_players(); ++i) {
      costs[std::to_string(i + 1)] = cost_json(player_cost(game, result.profile, i), o);
    }
    json counters = json::object();
    for (const auto& [k, v] : result.counters) counters[k] = v;
    std::cout << json{{"ok", pne},
                      {"method", a.method},
                      {"profile", json::parse(profile_to_json(game, result.profile))},
                      {"pne", pne},
                      {"costs", costs},
                      {"steps", {{"total", stats.total},
                                 {"placements", stats.placements},
                                 {"moves", stats.moves},
                                 {"insertions", stats.insertions},
                                 {"discards", stats.discards}}},
                      {"events", counters},
                      {"diagnostics", result.diagnostics}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "profile: " << profile_to_json(game, result.profile) << "\n";
    for (int i = 0; i < game.num_players(); ++i) {
      std::cout << "  player " << i + 1 << ": "
                << format_set(game, result.profile[i], "") << " cost "
                << cost_text(player_cost(game, result.profile, i), o) << "\n";
    }
    std::cout << "steps: " << stats.total << " (placements " << stats.placements
              << ", moves " << stats.moves << ", insertions " << stats.insertions
              << ", discards " << stats.discards << ")\n";
    std::cout << "PNE: " << (pne ? "true" : "false") << "\n";
  }
  return pne ? kExitOk : kExitInvalid;
}

int cmd_verify(const std::string& file, const std::string& profile_arg,
               const std::string& trace_path, const Output& o) {
  const Game game = instance_game(parse_instance(read_file(file)));
  if (!profile_arg.empty()) {
    const Profile profile = read_profile(game, profile_arg);
    const bool pne = is_pure_nash(game, profile);
    const bool scan = is_pure_nash_by_scan(game, profile);
    if (o.as_json) {
      std::cout << json{{"ok", pne && scan}, {"pne", pne}, {"scan_agrees", pne == scan}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "PNE: " << (pne ? "true" : "false") << "\n";
      if (pne != scan) std::cout << "warning: deviation scan disagrees\n";
    }
    return pne && scan ? kExitOk : kExitInvalid;
  }
  const MoveTrace trace = parse_trace_csv(game, read_file(trace_path));
  const CertifyReport report = certify_trace(game, trace);
  if (o.as_json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"step", v.step}, {"message", v.message}});
    }
    std::cout << json{{"ok", report.clean()},
                      {"complete", report.complete},
                      {"pne", report.final_pne},
                      {"violations", violations}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& v : report.violations) {
      std::cout << "step " << v.step << ": " << v.message << "\n";
    }
    std::cout << "trace " << (report.clean() ? "clean" : "has violations")
              << ", PNE: " << (report.final_pne ? "true" : "false") << "\n";
  }
  return report.clean() ? kExitOk : kExitInvalid;
}

int cmd_reduce(const std::string& file, const std::string& to,
               const std::string& out_path) {
  const Instance inst = parse_instance(read_file(file));
  std::string text;
  if (to == "priority") {
    if (std::holds_alternative<MarketGame>(inst.body)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "markets reduce to player-specific games; use --to playerspecific");
    }
    text = emit_game(instance_game(inst));
  } else if (to == "market") {
    if (const auto* m = std::get_if<MarketGame>(&inst.body)) {
      text = emit_market(*m);
    } else {
      text = emit_market(reduce_priority_to_market(instance_game(inst)));
    }
  } else {
    if (const auto* m = std::get_if<MarketGame>(&inst.body)) {
      text = emit_game(reduce_market_to_playerspecific(*m));
    } else {
      const Game g = instance_game(inst);
      text = g.player_specific()
                 ? emit_game(g)
                 : emit_game(reduce_market_to_playerspecific(reduce_priority_to_market(g)));
    }
  }
  write_file(out_path, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Priority-based congestion games: solve, verify, reduce, generate"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Machine-readable JSON on stdout");
  app.add_flag("--approx", out.approx, "Also print decimal approximations");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", file, "Instance JSON")->required();
  validate->fallthrough();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute a pure Nash equilibrium");
  solve->add_option("file", solve_args.file, "Instance JSON")->required();
  solve->add_option("--method", solve_args.method, "Solver")
      ->check(CLI::IsMember({"layered", "insertion", "br", "brute"}));
  solve->add_option("--policy", solve_args.policy, "Dynamics policy for br")
      ->check(CLI::IsMember({"roundrobin", "first", "best"}));
  solve->add_option("--max-steps", solve_args.max_steps, "Move cap for br, round cap for insertion");
  solve->add_flag("--repair", solve_args.repair, "Insertion: requeue placed players that can improve");
  solve->add_option("--start", solve_args.start, "Start profile JSON for br");
  solve->add_option("--trace", solve_args.trace_path, "Write the trace CSV here");
  solve->fallthrough();

  std::string profile_arg;
  std::string trace_path;
  auto* verify = app.add_subcommand("verify", "Check a profile or a trace");
  verify->add_option("file", file, "Instance JSON")->required();
  auto* profile_opt = verify->add_option("--profile", profile_arg, "Profile JSON or file");
  auto* trace_opt = verify->add_option("--trace", trace_path, "Trace CSV");
  profile_opt->excludes(trace_opt);
  verify->fallthrough();

  std::string to;
  std::string out_path;
  auto* reduce = app.add_subcommand("reduce", "Convert between models");
  reduce->add_option("file", file, "Instance JSON")->required();
  reduce->add_option("--to", to, "Target model")
      ->required()
      ->check(CLI::IsMember({"priority", "market", "playerspecific"}));
  reduce->add_option("-o,--output", out_path, "Output file (default stdout)");
  reduce->fallthrough();

  GeneratorParams params;
  std::uint64_t seed = 0;
  std::string space = "singleton";
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--players", params.players, "Players");
  gen->add_option("--resources", params.resources, "Resources");
  gen->add_option("--model", params.model, "Model")
      ->check(CLI::IsMember({"priority", "market", "classic", "affine"}));
  gen->add_option("--space", space, "Strategy space kind")
      ->check(CLI::IsMember(
          {"singleton", "explicit", "uniform", "partition", "graphic", "bases", "mixed"}));
  gen->add_option("--levels", params.levels, "Distinct priority (or cost) values");
  gen->add_flag("--consistent", params.consistent, "One priority map for all resources");
  gen->add_flag("--player-specific", params.player_specific, "Per-player delays");
  gen->add_option("--max-delay", params.max_delay, "Largest delay increment, in halves");
  gen->add_option("--inf-percent", params.infinity_percent, "Chance of infinite delays");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");
  gen->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file, out);
    if (*solve) return cmd_solve(solve_args, out);
    if (*verify) {
      if (profile_arg.empty() && trace_path.empty()) {
        std::cerr << "verify needs --profile or --trace\n";
        return kExitInvalid;
      }
      return cmd_verify(file, profile_arg, trace_path, out);
    }
    if (*reduce) return cmd_reduce(file, to, out_path);
    if (*gen) {
      params.space = parse_space_kind(space);
      write_file(out_path, emit_instance(generate_instance(params, seed)));
      return kExitOk;
    }
  } catch (const Error& err) {
    return report_error(err, out);
  }
  return kExitOk;
}
