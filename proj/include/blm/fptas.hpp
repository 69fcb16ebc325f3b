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

#ifndef BLM_FPTAS_HPP_
#define BLM_FPTAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blm/core.hpp"
#include "blm/dp.hpp"
#include "blm/rational.hpp"

// Approximation layer on top of the exact table solver. Profits are scaled
// down by alpha = eps * max_profit / |S| and floored, which caps the rounded
// profit range by floor(|S| / eps) and makes the table polynomial in |S| and
// 1/eps; the profit lost to flooring is at most eps * max_profit <=
// eps * OPT, so the recovered subset keeps a (1 - eps) fraction of the
// optimum. All alpha arithmetic is exact rational; nothing here touches
// floating point.
namespace blm {

struct RoundingContext {
  Rational epsilon;
  Rational alpha;
  std::int64_t max_profit = 0;   // of the instance that was rounded
  std::int64_t rounded_max = 0;  // max rounded profit, <= floor(|S| / eps)
  std::vector<std::int64_t> rounded;  // per element, in element order
};

// Drops every element whose cost alone exceeds the budget (it can appear in
// no feasible solution), prunes the family accordingly, and re-canonicalizes.
// May return an empty instance.
LaminarInstance preprocess(const LaminarInstance& inst);

// The instance with profits replaced by floor(profit / alpha), alpha =
// eps * max_profit / |S| exactly. Requires a positive max profit (the
// zero-profit degenerate case short-circuits in solve) and throws
// BlmError(zero_epsilon) unless eps > 0. Values of eps >= 1 are legal; the
// guarantee is then vacuous and solve attaches a warning.
std::pair<LaminarInstance, RoundingContext> round_profits(
    const LaminarInstance& inst, const Rational& eps);

struct SolveOutcome {
  Solution solution;  // ids, cost, and profit in original units

  // Rounding diagnostics; empty in exact mode and on short-circuits.
  std::optional<Rational> epsilon;
  std::optional<Rational> alpha;
  std::optional<std::int64_t> rounded_profit;  // table profit of the witness
  std::optional<std::int64_t> rounded_max;     // max rounded element profit

  // Table shape and instrumentation of the solving run (root table).
  std::int64_t table_rows = 0;
  std::int64_t table_cols = 0;
  std::size_t total_cells = 0;      // across every decomposition node
  std::size_t recursive_calls = 0;
  std::size_t node_count = 0;
  std::int32_t preprocessed_size = 0;

  // Certified upper bound on the optimal profit, derived from the rounding
  // guarantee: alpha * (rounded_profit + |S|). Zero means the solution is
  // exactly optimal (exact mode and degenerate cases).
  double opt_upper_bound = 0.0;

  std::vector<std::string> warnings;
};

// The (1 - eps)-approximate solver: preprocess, round profits, solve the
// rounded instance exactly, and map the witness back to original units. The
// returned subset is re-verified independent and within budget against the
// ORIGINAL instance before it is handed out.
SolveOutcome solve(const LaminarInstance& inst, const Rational& eps);

// The exact solver on original profits, behind the same preprocessing and
// reporting. Pseudo-polynomial: the table profit axis follows the actual
// profit values.
SolveOutcome solve_exact(const LaminarInstance& inst);

}  // namespace blm

#endif  // BLM_FPTAS_HPP_
