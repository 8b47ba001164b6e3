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

#ifndef PCG_GENERATOR_HPP_
#define PCG_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "pcg/io.hpp"

namespace pcg {

/// mt19937_64 with a rejection-sampled bounded draw, so a seed produces the
/// same stream with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

 private:
  std::mt19937_64 engine_;
};

enum class SpaceKind {
  kSingleton,
  kExplicit,
  kUniform,
  kPartition,
  kGraphic,
  kBases,
  kMixed,
};

/// Throws Error(kInvalidArgument) for an unknown name.
SpaceKind parse_space_kind(std::string_view name);

struct GeneratorParams {
  int players = 3;
  int resources = 3;
  std::string model = "priority";  // priority | market | classic | affine
  SpaceKind space = SpaceKind::kSingleton;
  bool consistent = false;
  bool player_specific = false;
  /// Distinct priority values (or distinct cost values for markets).
  int levels = 2;
  /// Largest increment between neighbouring delay values, in halves.
  int max_delay = 6;
  /// Chance, in percent, that a delay diagonal turns infinite.
  int infinity_percent = 0;
  /// Strategy-space size limits.
  int max_rank = 2;
  int max_ground = 5;
  int max_sets = 4;
};

/// Deterministic per (params, seed). Delay tables are built so that the
/// monotonicity and replacement conditions hold, then the result is validated
/// like any parsed file.
Instance generate_instance(const GeneratorParams& params, std::uint64_t seed);

/// A table over x + y <= bound satisfying the three delay conditions.
TableDelay random_table(Rng& rng, int bound, int max_step, int infinity_percent);

}  // namespace pcg

#endif  // PCG_GENERATOR_HPP_
