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

#include <algorithm>
#include <utility>

namespace blm {
namespace {

// Sums profits of the ids against the given instance; used to re-express a
// rounded-instance witness in original units.
std::int64_t profit_of(const LaminarInstance& inst,
                       const std::vector<std::string>& ids) {
  std::int64_t total = 0;
  for (const std::string& id : ids) {
    const std::int32_t idx = inst.find(id);
    if (idx < 0)
      throw BlmError(Errc::internal, "witness id missing from instance");
    total += inst.element(idx).profit;
  }
  return total;
}

std::int64_t cost_of(const LaminarInstance& inst,
                     const std::vector<std::string>& ids) {
  std::int64_t total = 0;
  for (const std::string& id : ids) total += inst.element(inst.find(id)).cost;
  return total;
}

// Certifies the witness against the original instance; a failure here is a
// solver bug, never a property of the input.
void verify_feasible(const LaminarInstance& original, const Solution& sol) {
  if (!is_independent(original, sol.ids))
    throw BlmError(Errc::internal, "solver produced a dependent subset");
  if (cost_of(original, sol.ids) > original.budget())
    throw BlmError(Errc::internal, "solver exceeded the budget");
}

void fill_dp_stats(SolveOutcome& out, const DpResult& dp) {
  out.table_rows = dp.table().q_max() + 1;
  out.table_cols = dp.table().profit_cap() + 1;
  out.total_cells = dp.root->total_cells();
  out.recursive_calls = dp.recursive_calls;
  out.node_count = dp.root->node_count();
}

}  // namespace

LaminarInstance preprocess(const LaminarInstance& inst) {
  RawInstance raw = inst.to_raw();
  std::vector<std::string> dropped;
  std::erase_if(raw.elements, [&](const Element& e) {
    if (e.cost <= raw.budget) return false;
    dropped.push_back(e.id);
    return true;
  });
  if (dropped.empty()) return inst;

  std::sort(dropped.begin(), dropped.end());
  for (RawFamilySet& set : raw.family) {
    std::erase_if(set.members, [&](const std::string& id) {
      return std::binary_search(dropped.begin(), dropped.end(), id);
    });
  }
  std::erase_if(raw.family,
                [](const RawFamilySet& set) { return set.members.empty(); });
  // Removal can equalize member sets or strip the ground set; build()
  // re-canonicalizes (merging duplicates at the minimum capacity) and
  // re-validates.
  return LaminarInstance::build(std::move(raw));
}

std::pair<LaminarInstance, RoundingContext> round_profits(
    const LaminarInstance& inst, const Rational& eps) {
  if (!eps.positive())
    throw BlmError(Errc::zero_epsilon, "epsilon must be positive");
  if (inst.max_profit() <= 0)
    throw BlmError(Errc::bad_params,
                   "profit rounding needs a positive max profit");

  RoundingContext ctx;
  ctx.epsilon = eps;
  ctx.max_profit = inst.max_profit();
  // alpha = eps * max_profit / |S|; rounding by alpha maps max_profit to
  // floor(|S| / eps), which bounds every rounded profit.
  ctx.alpha = Rational::make(
      static_cast<__int128>(eps.num) * ctx.max_profit,
      static_cast<__int128>(eps.den) * inst.size());

  ctx.rounded.reserve(inst.size());
  for (const Element& e : inst.elements()) {
    const std::int64_t r = floor_scaled(e.profit, ctx.alpha.den, ctx.alpha.num);
    ctx.rounded.push_back(r);
    ctx.rounded_max = std::max(ctx.rounded_max, r);
  }
  return {inst.with_profits(ctx.rounded), std::move(ctx)};
}

SolveOutcome solve(const LaminarInstance& inst, const Rational& eps) {
  if (!eps.positive())
    throw BlmError(Errc::zero_epsilon, "epsilon must be positive");

  SolveOutcome out;
  out.epsilon = eps;
  if (eps.at_least(1))
    out.warnings.push_back(
        "epsilon >= 1: the (1 - epsilon) guarantee is trivially satisfied");

  const LaminarInstance pre = preprocess(inst);
  out.preprocessed_size = pre.size();

  if (pre.max_profit() == 0) {
    // Nothing affordable earns profit (or nothing is affordable at all);
    // the empty set is optimal and rounding is undefined (alpha would be 0).
    return out;
  }

  auto [rounded_inst, ctx] = round_profits(pre, eps);
  out.alpha = ctx.alpha;
  out.rounded_max = ctx.rounded_max;

  const DpResult dp = compute_dp(rounded_inst);
  fill_dp_stats(out, dp);

  const auto best = best_feasible(dp.table(), inst.budget());
  if (!best) throw BlmError(Errc::internal, "no feasible cell in a DP table");
  Solution witness = backtrack(*dp.root, best->q, best->t);
  out.rounded_profit = witness.profit;

  // Costs are untouched by rounding; only the profit needs re-expressing.
  out.solution.ids = std::move(witness.ids);
  out.solution.cost = witness.cost;
  out.solution.profit = profit_of(inst, out.solution.ids);
  verify_feasible(inst, out.solution);

  // alpha * (rounded optimum + |S|) bounds the true optimum from above:
  // each of the at most |S| solution elements loses less than alpha to the
  // floor, and the rounded optimum is exact for the rounded instance.
  out.opt_upper_bound = out.alpha->to_double() *
                        (static_cast<double>(*out.rounded_profit) +
                         static_cast<double>(pre.size()));
  return out;
}

SolveOutcome solve_exact(const LaminarInstance& inst) {
  SolveOutcome out;
  const LaminarInstance pre = preprocess(inst);
  out.preprocessed_size = pre.size();

  const DpResult dp = compute_dp(pre);
  fill_dp_stats(out, dp);

  const auto best = best_feasible(dp.table(), inst.budget());
  if (!best) throw BlmError(Errc::internal, "no feasible cell in a DP table");
  Solution witness = backtrack(*dp.root, best->q, best->t);

  out.solution = std::move(witness);
  verify_feasible(inst, out.solution);
  return out;
}

}  // namespace blm
