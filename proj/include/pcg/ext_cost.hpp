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

#ifndef PCG_EXT_COST_HPP_
#define PCG_EXT_COST_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pcg {

using Rational = mpq_class;

/// Parses "p/q", "p" (q = 1) into a canonical rational. Throws
/// Error(kParseError) on malformed input or a zero denominator.
/// num/den in lowest terms; den > 0.
Rational make_rational(long num, long den);

Rational parse_rational(std::string_view text);

/// Canonical "p/q" form with q >= 1 and gcd(p, q) = 1. Integers keep "/1".
std::string rational_to_string(const Rational& r);

/// A nonnegative exact rational, or +infinity.
///
/// Addition saturates at infinity. Infinity compares equal to itself and
/// strictly greater than every finite value.
class ExtCost {
 public:
  ExtCost() = default;
  ExtCost(long value);  // NOLINT: implicit from small integers is handy.
  explicit ExtCost(Rational value);

  static ExtCost infinity();
  /// Accepts "inf" or a nonnegative rational literal.
  static ExtCost parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Finite value; zero for infinity.
  const Rational& value() const { return value_; }

  ExtCost& operator+=(const ExtCost& other);
  friend ExtCost operator+(ExtCost a, const ExtCost& b) { return a += b; }

  /// Finite difference a - b; both operands must be finite.
  friend Rational operator-(const ExtCost& a, const ExtCost& b);

  friend bool operator==(const ExtCost& a, const ExtCost& b);
  friend std::strong_ordering operator<=>(const ExtCost& a, const ExtCost& b);

  std::string to_string() const;
  double approx() const;

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

}  // namespace pcg

#endif  // PCG_EXT_COST_HPP_
