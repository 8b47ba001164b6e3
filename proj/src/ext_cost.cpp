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

#include "pcg/ext_cost.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "pcg/error.hpp"

namespace pcg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::kOutOfBound: return "OUT_OF_BOUND";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kNoExchange: return "NO_EXCHANGE";
    case ErrorCode::kNotImproving: return "NOT_IMPROVING";
    case ErrorCode::kPlayerNotPlaced: return "PLAYER_NOT_PLACED";
    case ErrorCode::kNotSingleton: return "NOT_SINGLETON";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::kLevelMismatch: return "LEVEL_MISMATCH";
    case ErrorCode::kPlayerSpecificInput: return "PLAYER_SPECIFIC_INPUT";
    case ErrorCode::kInconsistentPriorities: return "INCONSISTENT_PRIORITIES";
    case ErrorCode::kLayerCapExhausted: return "LAYER_CAP_EXHAUSTED";
    case ErrorCode::kNonMonotoneDelay: return "NON_MONOTONE_DELAY";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kInvariantViolated: return "INVARIANT_VIOLATED";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw Error(ErrorCode::kParseError,
              "invalid rational '" + std::string(text) + "': " + why);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) bad_literal(text, "expected p/q");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) bad_literal(text, "zero denominator");
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ExtCost::ExtCost(long value) : value_(value) {
  if (value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "ExtCost must be nonnegative");
  }
}

ExtCost::ExtCost(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "ExtCost must be nonnegative");
  }
}

ExtCost ExtCost::infinity() {
  ExtCost c;
  c.infinite_ = true;
  return c;
}

ExtCost ExtCost::parse(std::string_view text) {
  if (text == "inf") return infinity();
  Rational r = parse_rational(text);
  if (sgn(r) < 0) bad_literal(text, "costs must be nonnegative");
  return ExtCost(std::move(r));
}

ExtCost& ExtCost::operator+=(const ExtCost& other) {
  if (infinite_) return *this;
  if (other.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += other.value_;
  return *this;
}

Rational operator-(const ExtCost& a, const ExtCost& b) {
  if (a.infinite_ || b.infinite_) {
    throw Error(ErrorCode::kInvalidArgument,
                "difference of infinite costs is undefined");
  }
  return Rational(a.value_ - b.value_);
}

bool operator==(const ExtCost& a, const ExtCost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtCost& a, const ExtCost& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string ExtCost::to_string() const {
  return infinite_ ? std::string("inf") : rational_to_string(value_);
}

double ExtCost::approx() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.get_d();
}

}  // namespace pcg
