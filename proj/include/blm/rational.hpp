// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLM_RATIONAL_HPP_
#define BLM_RATIONAL_HPP_

#include <cstdint>
#include <string>

namespace blm {

// Exact non-negative rational, gcd-reduced, denominator positive. Just
// enough arithmetic for the profit-rounding step, which must not run in
// floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Reduces n/d. Throws BlmError(too_large) when the reduced form does not
  // fit 64 bits and BlmError(internal) on d <= 0 or n < 0.
  static Rational make(__int128 n, __int128 d);

  // Parses a decimal literal such as "0.25", "2", or ".5" into an exact
  // rational. Signs and exponents are not accepted. Throws
  // BlmError(bad_params) on malformed input or more than 18 fraction digits.
  static Rational parse_decimal(const std::string& text);

  bool positive() const { return num > 0; }

  // this >= value, exactly.
  bool at_least(std::int64_t value) const;

  std::string to_string() const;  // "num/den"
  double to_double() const;
};

// floor(a * num / den) for non-negative a, in 128-bit intermediate
// arithmetic. den must be positive.
std::int64_t floor_scaled(std::int64_t a, std::int64_t num, std::int64_t den);

}  // namespace blm

#endif  // BLM_RATIONAL_HPP_
