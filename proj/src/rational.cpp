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

#include "blm/rational.hpp"

#include <limits>

#include "blm/core.hpp"

namespace blm {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d <= 0) throw BlmError(Errc::internal, "rational denominator not positive");
  if (n < 0) throw BlmError(Errc::internal, "rational numerator negative");
  if (n == 0) return Rational{0, 1};
  const __int128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (n > std::numeric_limits<std::int64_t>::max() ||
      d > std::numeric_limits<std::int64_t>::max())
    throw BlmError(Errc::too_large, "rational does not fit 64 bits");
  return Rational{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

Rational Rational::parse_decimal(const std::string& text) {
  std::string digits;
  int fraction_digits = -1;  // -1: no dot seen yet
  for (char c : text) {
    if (c == '.') {
      if (fraction_digits >= 0)
        throw BlmError(Errc::bad_params,
                       "malformed decimal '" + text + "': two dots");
      fraction_digits = 0;
      continue;
    }
    if (c < '0' || c > '9')
      throw BlmError(Errc::bad_params,
                     "malformed decimal '" + text + "': expected digits");
    digits.push_back(c);
    if (fraction_digits >= 0) ++fraction_digits;
  }
  if (digits.empty())
    throw BlmError(Errc::bad_params, "malformed decimal '" + text + "'");
  if (fraction_digits > 18)
    throw BlmError(Errc::bad_params,
                   "decimal '" + text + "' has more than 18 fraction digits");

  __int128 num = 0;
  for (char c : digits) {
    num = num * 10 + (c - '0');
    if (num > std::numeric_limits<std::int64_t>::max())
      throw BlmError(Errc::bad_params,
                     "decimal '" + text + "' has too many digits");
  }
  __int128 den = 1;
  for (int i = 0; i < std::max(fraction_digits, 0); ++i) den *= 10;
  return make(num, den);
}

bool Rational::at_least(std::int64_t value) const {
  return static_cast<__int128>(num) >= static_cast<__int128>(den) * value;
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::int64_t floor_scaled(std::int64_t a, std::int64_t num, std::int64_t den) {
  if (den <= 0) throw BlmError(Errc::internal, "floor_scaled: bad denominator");
  if (a < 0 || num < 0) throw BlmError(Errc::internal, "floor_scaled: negative");
  const __int128 scaled = static_cast<__int128>(a) * num / den;
  if (scaled > std::numeric_limits<std::int64_t>::max())
    throw BlmError(Errc::too_large, "scaled value does not fit 64 bits");
  return static_cast<std::int64_t>(scaled);
}

}  // namespace blm
