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

#ifndef PCG_ORACLE_HPP_
#define PCG_ORACLE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "pcg/congestion.hpp"
#include "pcg/dynamics.hpp"
#include "pcg/markets.hpp"
#include "pcg/model.hpp"

namespace pcg {

struct EnumerationBudget {
  long max_profiles = 2'000'000;
  long observed = 0;

  /// Default budget, overridden by the PCG_BUDGET environment variable.
  static EnumerationBudget from_env();
};

/// Visits every combination of one strategy per player, id-lexicographically
/// (the last player varies fastest). Throws Error(kBudgetExceeded) when a
/// profile beyond the budget would be visited.
void enumerate_profiles(const std::vector<std::vector<ResourceSet>>& choices,
                        EnumerationBudget& budget,
                        const std::function<void(const Profile&)>& visit);

void enumerate_profiles(const Game& game, EnumerationBudget& budget,
                        const std::function<void(const Profile&)>& visit);

using CostFn = std::function<ExtCost(const Profile&, PlayerId)>;

/// Every profile where no single player lowers her cost by switching to any
/// other strategy in `choices`. Uses only the cost function.
std::vector<Profile> brute_force_pne(
    const std::vector<std::vector<ResourceSet>>& choices, const CostFn& cost,
    EnumerationBudget& budget);

std::vector<Profile> brute_force_pne(const Game& game, EnumerationBudget& budget);
std::vector<Profile> brute_force_pne(const MarketGame& market,
                                     EnumerationBudget& budget);

/// Deviation scan of one profile over all_bases(), cost evaluation only.
bool is_pure_nash_by_scan(const Game& game, const Profile& profile);

struct Violation {
  int step = 0;  // -1 for whole-trace findings
  std::string message;
};

struct CertifyReport {
  std::vector<Violation> violations;
  bool complete = false;  // final state places every player
  bool final_pne = false;
  Profile final_profile;

  bool clean() const { return violations.empty(); }
};

/// Replays a trace against the game. Checks that every row starts where the
/// previous left off, recorded costs and potentials match recomputation,
/// moves strictly lower the mover's cost (matroid moves one swap at a time),
/// the potential named by each row's prefix moves the right way, insertion
/// rounds keep every placed player content, and the final profile is a PNE.
CertifyReport certify_trace(const Game& game, const MoveTrace& trace);

}  // namespace pcg

#endif  // PCG_ORACLE_HPP_
