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

#include <doctest.h>

#include <cstdint>
#include <string>

#include "blm/core.hpp"

namespace blm {
namespace {

TEST_CASE("make reduces to lowest terms") {
  const Rational half = Rational::make(2, 4);
  CHECK(half.num == 1);
  CHECK(half.den == 2);
  const Rational whole = Rational::make(12, 3);
  CHECK(whole.num == 4);
  CHECK(whole.den == 1);
  const Rational zero = Rational::make(0, 7);
  CHECK(zero.num == 0);
  CHECK(zero.den == 1);
  CHECK_FALSE(zero.positive());
}

TEST_CASE("make rejects nonsense and overflow") {
  CHECK_THROWS_AS(Rational::make(1, 0), BlmError);
  CHECK_THROWS_AS(Rational::make(1, -2), BlmError);
  CHECK_THROWS_AS(Rational::make(-1, 2), BlmError);
  const __int128 huge = static_cast<__int128>(1) << 100;
  CHECK_THROWS_AS(Rational::make(huge, 3), BlmError);
  // Reduction can rescue a huge input when the quotient fits.
  const Rational rescued = Rational::make(huge, huge / 2);
  CHECK(rescued.num == 2);
  CHECK(rescued.den == 1);
}

TEST_CASE("parse_decimal understands plain decimals") {
  CHECK(Rational::parse_decimal("0.5").num == 1);
  CHECK(Rational::parse_decimal("0.5").den == 2);
  CHECK(Rational::parse_decimal("0.25").den == 4);
  CHECK(Rational::parse_decimal("0.1").den == 10);
  CHECK(Rational::parse_decimal("0.01").den == 100);
  CHECK(Rational::parse_decimal("2").num == 2);
  CHECK(Rational::parse_decimal("2").den == 1);
  CHECK(Rational::parse_decimal(".5").num == 1);
  CHECK(Rational::parse_decimal("1.").num == 1);
  CHECK(Rational::parse_decimal("0.200").num == 1);
  CHECK(Rational::parse_decimal("0.200").den == 5);
  CHECK(Rational::parse_decimal("0").num == 0);
  // 18 fraction digits are the documented maximum.
  const Rational tiny = Rational::parse_decimal("0.000000000000000001");
  CHECK(tiny.num == 1);
  CHECK(tiny.den == 1'000'000'000'000'000'000LL);
}

TEST_CASE("parse_decimal rejects malformed input") {
  for (const char* bad :
       {"", ".", "1.2.3", "-0.5", "+0.5", "1e-2", "0x10", "half", " 0.5",
        "0.5 ", "0.0000000000000000001"}) {
    CHECK_THROWS_AS(Rational::parse_decimal(bad), BlmError);
  }
}

TEST_CASE("at_least compares exactly") {
  const Rational two_thirds = Rational::make(2, 3);
  CHECK(two_thirds.at_least(0));
  CHECK_FALSE(two_thirds.at_least(1));
  const Rational one = Rational::make(3, 3);
  CHECK(one.at_least(1));
  CHECK_FALSE(one.at_least(2));
  const Rational big = Rational::make(9, 2);
  CHECK(big.at_least(4));
  CHECK_FALSE(big.at_least(5));
}

TEST_CASE("to_string and to_double are faithful") {
  const Rational q = Rational::make(25, 2);
  CHECK(q.to_string() == "25/2");
  CHECK(q.to_double() == doctest::Approx(12.5));
}

TEST_CASE("floor_scaled floors the exact product") {
  CHECK(floor_scaled(30, 2, 25) == 2);   // 30 * 2/25 = 2.4
  CHECK(floor_scaled(4, 3, 2) == 6);     // 4 * 3/2 = 6 exactly
  CHECK(floor_scaled(3, 3, 2) == 4);     // 4.5 floors to 4
  CHECK(floor_scaled(0, 7, 3) == 0);
  // Large operands stay exact through the 128-bit intermediate.
  const std::int64_t big = 4'000'000'000'000'000'000LL;
  CHECK(floor_scaled(big, 3, 4) == 3'000'000'000'000'000'000LL);
}

}  // namespace
}  // namespace blm
