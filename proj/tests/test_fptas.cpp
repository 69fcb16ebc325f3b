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

#include "blm/fptas.hpp"

#include <doctest.h>

#include <string>
#include <vector>

#include "blm/core.hpp"
#include "blm/oracle.hpp"
#include "test_support.hpp"

namespace blm {
namespace {

using test::el;
using test::fam;
using test::raw;

LaminarInstance nested_pair() {
  return LaminarInstance::build(
      raw(4, {el("a", 1, 2), el("b", 2, 3), el("c", 3, 4)},
          {fam({"a", "b"}, 1), fam({"a", "b", "c"}, 2)}));
}

TEST_CASE("preprocess drops exactly the unaffordable elements") {
  // Budget 5 with costs 3, 9, 5: only the cost-9 element can never appear
  // in a feasible solution.
  const LaminarInstance inst = LaminarInstance::build(
      raw(5, {el("cheap", 3, 1), el("dear", 9, 100), el("edge", 5, 2)},
          {fam({"cheap", "dear", "edge"}, 3)}));
  const LaminarInstance pre = preprocess(inst);
  REQUIRE(pre.size() == 2);
  CHECK(pre.find("cheap") == 0);
  CHECK(pre.find("edge") == 1);
  CHECK(pre.find("dear") == -1);
  CHECK(pre.budget() == 5);
}

TEST_CASE("preprocess is the identity when everything is affordable") {
  const LaminarInstance inst = nested_pair();
  const LaminarInstance pre = preprocess(inst);
  CHECK(pre.to_raw() == inst.to_raw());
}

TEST_CASE("preprocess can empty the instance") {
  const LaminarInstance inst = LaminarInstance::build(
      raw(1, {el("a", 5, 9), el("b", 7, 9)}, {fam({"a", "b"}, 2)}));
  const LaminarInstance pre = preprocess(inst);
  CHECK(pre.size() == 0);
}

TEST_CASE("preprocess repairs family sets that collapse together") {
  // Dropping "dear" makes {cheap, dear} equal to {cheap}; the two sets
  // merge at the tighter capacity and the result still validates.
  const LaminarInstance inst = LaminarInstance::build(
      raw(4, {el("cheap", 1, 1), el("dear", 9, 9), el("other", 2, 2)},
          {fam({"cheap", "dear"}, 2), fam({"cheap"}, 1),
           fam({"cheap", "dear", "other"}, 2)}));
  const LaminarInstance pre = preprocess(inst);
  REQUIRE(pre.size() == 2);
  CHECK(validate_laminar(pre.to_raw()).ok());
  // {cheap} survives with capacity min(2, 1) = 1.
  bool found = false;
  for (const FamilySet& set : pre.family()) {
    if (set.members == std::vector<std::int32_t>{pre.find("cheap")}) {
      found = true;
      CHECK(set.capacity == 1);
    }
  }
  CHECK(found);
}

TEST_CASE("rounding scales by alpha = eps * max_profit / size") {
  // Four elements, max profit 100, eps 1/2: alpha is 25/2 and a profit of
  // 30 rounds to floor(30 / (25/2)) = 2.
  const LaminarInstance inst = LaminarInstance::build(
      raw(99, {el("p", 1, 100), el("q", 1, 30), el("r", 1, 12),
               el("s", 1, 13)},
          {fam({"p", "q", "r", "s"}, 4)}));
  const auto [rounded, ctx] = round_profits(inst, Rational::make(1, 2));
  CHECK(ctx.alpha.num == 25);
  CHECK(ctx.alpha.den == 2);
  CHECK(rounded.element(rounded.find("q")).profit == 2);
  CHECK(rounded.element(rounded.find("p")).profit == 8);  // floor(n / eps)
  CHECK(rounded.element(rounded.find("r")).profit == 0);  // 12 / 12.5
  CHECK(ctx.rounded_max == 8);
  CHECK(ctx.max_profit == 100);
  // Costs and budget are untouched.
  CHECK(rounded.element(0).cost == 1);
  CHECK(rounded.budget() == 99);
}

TEST_CASE("rounding the nested-pair example") {
  const auto [rounded, ctx] =
      round_profits(nested_pair(), Rational::make(1, 2));
  CHECK(ctx.alpha.num == 2);
  CHECK(ctx.alpha.den == 3);
  CHECK(rounded.element(rounded.find("a")).profit == 3);
  CHECK(rounded.element(rounded.find("b")).profit == 4);
  CHECK(rounded.element(rounded.find("c")).profit == 6);
  CHECK(ctx.rounded_max == 6);  // floor(|S| / eps) = floor(3 * 2) = 6
}

TEST_CASE("rounding rejects degenerate parameters") {
  CHECK_THROWS_AS(round_profits(nested_pair(), Rational{0, 1}), BlmError);
  const LaminarInstance flat = LaminarInstance::build(
      raw(4, {el("a", 1, 0)}, {fam({"a"}, 1)}));
  CHECK_THROWS_AS(round_profits(flat, Rational::make(1, 2)), BlmError);
}

TEST_CASE("rounded profits never exceed floor(size / eps)") {
  const std::vector<Rational> epsilons = {
      Rational::make(1, 2), Rational::make(1, 10), Rational::make(1, 100),
      Rational::make(3, 10), Rational::make(2, 1)};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const LaminarInstance inst = test::small_instance(seed, 9);
    if (inst.max_profit() == 0) continue;
    for (const Rational& eps : epsilons) {
      const auto [rounded, ctx] = round_profits(inst, eps);
      const std::int64_t bound =
          floor_scaled(inst.size(), eps.den, eps.num);  // floor(n / eps)
      CHECK(ctx.rounded_max <= bound);
      CHECK(rounded.max_profit() == ctx.rounded_max);
    }
  }
}

TEST_CASE("solve reproduces the nested-pair walkthrough") {
  const SolveOutcome out = solve(nested_pair(), Rational::make(1, 2));
  CHECK(out.solution.ids == std::vector<std::string>{"a", "c"});
  CHECK(out.solution.profit == 6);
  CHECK(out.solution.cost == 4);
  REQUIRE(out.alpha.has_value());
  CHECK(out.alpha->num == 2);
  CHECK(out.alpha->den == 3);
  CHECK(out.rounded_profit == 9);  // 3 + 6 in rounded units
  CHECK(out.rounded_max == 6);
  CHECK(out.preprocessed_size == 3);
  // Upper bound: alpha * (9 + 3) = 8, which indeed dominates the true
  // optimum of 6.
  CHECK(out.opt_upper_bound == doctest::Approx(8.0));
  CHECK(out.warnings.empty());
}

TEST_CASE("solve_exact matches the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const LaminarInstance inst =
        test::small_instance(seed, 2 + static_cast<std::int32_t>(seed % 9));
    const SolveOutcome out = solve_exact(inst);
    const OracleResult truth = enumerate_opt(inst);
    CHECK_MESSAGE(out.solution.profit == truth.profit, "seed ", seed);
    CHECK(is_independent(inst, out.solution.ids));
    CHECK(out.solution.cost <= inst.budget());
    CHECK(out.opt_upper_bound == 0.0);  // exact mode certifies optimality
  }
}

TEST_CASE("solve honors the approximation guarantee on small instances") {
  const std::vector<Rational> epsilons = {
      Rational::make(1, 2), Rational::make(1, 10), Rational::make(1, 100)};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const LaminarInstance inst =
        test::small_instance(seed, 2 + static_cast<std::int32_t>(seed % 8));
    const OracleResult truth = enumerate_opt(inst);
    for (const Rational& eps : epsilons) {
      const SolveOutcome out = solve(inst, eps);
      // profit >= (1 - eps) * OPT, compared exactly in integers:
      // profit * den >= OPT * (den - num).
      CHECK_MESSAGE(
          out.solution.profit * eps.den >= truth.profit * (eps.den - eps.num),
          "seed ", seed, " eps ", eps.to_string(), ": got ",
          out.solution.profit, " against optimum ", truth.profit);
      CHECK(is_independent(inst, out.solution.ids));
      CHECK(out.solution.cost <= inst.budget());
      // The certificate must dominate the true optimum.
      if (out.opt_upper_bound > 0.0)
        CHECK(out.opt_upper_bound >= static_cast<double>(truth.profit) - 1e-9);
    }
  }
}

TEST_CASE("solve short-circuits when no affordable element has profit") {
  SUBCASE("all profits zero") {
    const LaminarInstance inst = LaminarInstance::build(
        raw(4, {el("a", 1, 0), el("b", 2, 0)}, {fam({"a", "b"}, 2)}));
    const SolveOutcome out = solve(inst, Rational::make(1, 2));
    CHECK(out.solution.ids.empty());
    CHECK(out.solution.profit == 0);
    CHECK_FALSE(out.alpha.has_value());
    CHECK(out.opt_upper_bound == 0.0);  // the empty set is exactly optimal
    CHECK(out.preprocessed_size == 2);
  }
  SUBCASE("the only profitable element is unaffordable") {
    const LaminarInstance inst = LaminarInstance::build(
        raw(4, {el("a", 1, 0), el("b", 9, 50)}, {fam({"a", "b"}, 2)}));
    const SolveOutcome out = solve(inst, Rational::make(1, 2));
    CHECK(out.solution.ids.empty());
    CHECK(out.solution.profit == 0);
    CHECK(out.preprocessed_size == 1);
  }
  SUBCASE("the empty instance") {
    const SolveOutcome out = solve(LaminarInstance{}, Rational::make(1, 2));
    CHECK(out.solution.ids.empty());
    CHECK(out.solution.profit == 0);
  }
}

TEST_CASE("solve warns when epsilon voids the guarantee") {
  const SolveOutcome out = solve(nested_pair(), Rational::make(2, 1));
  REQUIRE(out.warnings.size() == 1);
  CHECK(out.warnings[0].find("epsilon >= 1") != std::string::npos);
  // The answer is still a feasible independent set.
  CHECK(is_independent(nested_pair(), out.solution.ids));
  CHECK(out.solution.cost <= 4);
}

TEST_CASE("solve rejects a zero epsilon") {
  CHECK_THROWS_AS(solve(nested_pair(), Rational{0, 1}), BlmError);
}

TEST_CASE("tighter epsilon never yields a worse answer on these instances") {
  // Not a theorem in general, but on small instances the 1/100 run is
  // effectively exact, so it must reach the oracle optimum.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const LaminarInstance inst = test::small_instance(seed, 6);
    const OracleResult truth = enumerate_opt(inst);
    const SolveOutcome fine = solve(inst, Rational::make(1, 100));
    CHECK(fine.solution.profit == truth.profit);
  }
}

}  // namespace
}  // namespace blm
