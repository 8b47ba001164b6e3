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

#ifndef PCG_ERROR_HPP_
#define PCG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcg {

enum class ErrorCode {
  kValidationFailed,
  kOutOfBound,
  kParseError,
  kNoExchange,
  kNotImproving,
  kPlayerNotPlaced,
  kNotSingleton,
  kLengthMismatch,
  kShapeMismatch,
  kLevelMismatch,
  kPlayerSpecificInput,
  kInconsistentPriorities,
  kLayerCapExhausted,
  kNonMonotoneDelay,
  kBudgetExceeded,
  kInvariantViolated,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// One structured finding, e.g. a missing table entry or an axiom breach.
struct Diagnostic {
  std::string where;    // "delays.a", "strategies[0]", ...
  std::string message;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::vector<Diagnostic> diagnostics = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        diagnostics_(std::move(diagnostics)) {}

  ErrorCode code() const { return code_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  ErrorCode code_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace pcg

#endif  // PCG_ERROR_HPP_
