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


// Python bindings. Instances, profiles and traces cross the boundary as JSON
// or CSV text; the pure-Python package wraps them in friendlier objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "pcg/congestion.hpp"
#include "pcg/dynamics.hpp"
#include "pcg/error.hpp"
#include "pcg/generator.hpp"
#include "pcg/io.hpp"
#include "pcg/oracle.hpp"

namespace py = pybind11;

namespace pcg {
namespace {

PYBIND11_CONSTINIT py::gil_safe_call_once_and_store<py::object> error_type;

PlayerId player_index(const Game& game, int player) {
  if (player < 1 || player > game.num_players()) {
    throw Error(ErrorCode::kInvalidArgument,
                "player " + std::to_string(player) + " is out of range");
  }
  return player - 1;
}

py::dict solve_result(const Game& game, const SolveResult& r) {
  const StepStats stats = count_steps(r.trace);
  std::ostringstream csv;
  write_trace_csv(csv, game, r.trace);
  py::dict steps;
  steps["total"] = stats.total;
  steps["placements"] = stats.placements;
  steps["moves"] = stats.moves;
  steps["insertions"] = stats.insertions;
  steps["discards"] = stats.discards;
  py::dict out;
  out["profile"] = profile_to_json(game, r.profile);
  out["converged"] = r.trace.status == RunStatus::kConverged;
  out["steps"] = steps;
  out["counters"] = r.counters;
  out["diagnostics"] = r.diagnostics;
  out["trace_csv"] = csv.str();
  return out;
}

SolveResult solve(const Game& game, const std::string& method, bool repair,
                  const std::string& policy, long max_steps) {
  if (method == "layered") return solve_consistent_layered(game);
  if (method == "insertion") {
    InsertionOptions options;
    options.repair = repair;
    options.max_rounds = max_steps;
    return solve_insertion(game, options);
  }
  if (method == "br") {
    Policy p = Policy::kRoundRobin;
    if (policy == "first") {
      p = Policy::kFirstImprover;
    } else if (policy == "best") {
      p = Policy::kBestImprover;
    } else if (policy != "roundrobin") {
      throw Error(ErrorCode::kInvalidArgument, "unknown policy '" + policy + "'");
    }
    Profile start;
    for (int i = 0; i < game.num_players(); ++i) {
      start.push_back(greedy_min_base(game.space(i),
                                      Weights(game.num_resources(), ExtCost(0))));
    }
    return run_dynamics(game, start, p, max_steps);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + method + "'");
}

}  // namespace
}  // namespace pcg

PYBIND11_MODULE(_core, m) {
  using namespace pcg;
  m.doc() = "Priority-based congestion games";

  error_type.call_once_and_store_result([&]() -> py::object {
    return py::exception<Error>(m, "PcgError", PyExc_RuntimeError);
  });
  m.attr("PcgError") = error_type.get_stored();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object err = type(std::string(e.what()));
      err.attr("code") = std::string(error_code_name(e.code()));
      py::list diags;
      for (const auto& d : e.diagnostics()) diags.append(py::make_tuple(d.where, d.message));
      err.attr("diagnostics") = diags;
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::class_<Game>(m, "Game")
      .def_static(
          "from_json",
          [](const std::string& text) { return instance_game(parse_instance(text)); },
          py::arg("text"))
      .def_property_readonly("num_players", &Game::num_players)
      .def_property_readonly("num_resources", &Game::num_resources)
      .def_property_readonly("resources",
                             [](const Game& g) {
                               std::vector<std::string> names;
                               for (int e = 0; e < g.num_resources(); ++e) {
                                 names.push_back(g.resource_name(e));
                               }
                               return names;
                             })
      .def_property_readonly("consistent",
                             [](const Game& g) { return g.priorities().is_consistent(); })
      .def("to_json", [](const Game& g) { return emit_game(g); })
      .def(
          "cost",
          [](const Game& g, const std::string& profile, int player) {
            const Profile p = parse_profile_json(g, profile);
            return player_cost(g, p, player_index(g, player)).to_string();
          },
          py::arg("profile"), py::arg("player"))
      .def(
          "is_pure_nash",
          [](const Game& g, const std::string& profile) {
            return is_pure_nash(g, parse_profile_json(g, profile));
          },
          py::arg("profile"))
      .def(
          "solve",
          [](const Game& g, const std::string& method, bool repair, const std::string& policy,
             long max_steps) {
            return solve_result(g, solve(g, method, repair, policy, max_steps));
          },
          py::arg("method") = "layered", py::arg("repair") = false,
          py::arg("policy") = "roundrobin", py::arg("max_steps") = 100000)
      .def(
          "equilibria",
          [](const Game& g, long max_profiles) {
            EnumerationBudget budget;
            budget.max_profiles = max_profiles;
            std::vector<std::string> out;
            for (const auto& p : brute_force_pne(g, budget)) out.push_back(profile_to_json(g, p));
            return out;
          },
          py::arg("max_profiles") = 2'000'000)
      .def(
          "certify_trace",
          [](const Game& g, const std::string& csv) {
            const CertifyReport report = certify_trace(g, parse_trace_csv(g, csv));
            py::list violations;
            for (const auto& v : report.violations) {
              violations.append(py::make_tuple(v.step, v.message));
            }
            py::dict out;
            out["clean"] = report.clean();
            out["complete"] = report.complete;
            out["pne"] = report.final_pne;
            out["violations"] = violations;
            return out;
          },
          py::arg("csv"));

  m.def(
      "generate",
      [](std::uint64_t seed, int players, int resources, const std::string& model,
         const std::string& space, int levels, bool consistent, bool player_specific,
         int infinity_percent) {
        GeneratorParams params;
        params.players = players;
        params.resources = resources;
        params.model = model;
        params.space = parse_space_kind(space);
        params.levels = levels;
        params.consistent = consistent;
        params.player_specific = player_specific;
        params.infinity_percent = infinity_percent;
        return emit_instance(generate_instance(params, seed));
      },
      py::arg("seed"), py::arg("players") = 3, py::arg("resources") = 3,
      py::arg("model") = "priority", py::arg("space") = "singleton", py::arg("levels") = 2,
      py::arg("consistent") = false, py::arg("player_specific") = false,
      py::arg("infinity_percent") = 0);
}
