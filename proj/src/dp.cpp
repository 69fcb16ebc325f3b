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

#include "blm/dp.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace blm {
namespace {

// Upper bound on the profit any independent subset of the instance can
// reach: at most min(k(S), |S|) elements fit, each worth at most the
// maximum profit, and the total can never exceed the profit sum. Cells
// beyond this bound are unreachable by definition, so the table axis stops
// there.
std::int64_t profit_axis_bound(const LaminarInstance& inst) {
  const __int128 sum = inst.total_profit();
  const __int128 k_eff = std::min<std::int64_t>(
      inst.ground_capacity(), static_cast<std::int64_t>(inst.size()));
  const __int128 capped = k_eff * static_cast<__int128>(inst.max_profit());
  return static_cast<std::int64_t>(std::min(sum, capped));
}

struct DpContext {
  const DpOptions& options;
  std::size_t invocations = 0;
};

std::int32_t select_maximal_set(const LaminarInstance& inst,
                                MaximalTieBreak tie_break) {
  if (tie_break == MaximalTieBreak::least_min_id) return find_maximal_set(inst);
  const std::vector<std::int32_t> candidates = maximal_proper_sets(inst);
  if (candidates.empty())
    throw BlmError(Errc::no_proper_set,
                   "family holds no set besides the ground set");
  std::int32_t best = candidates.front();
  for (std::int32_t c : candidates) {
    if (inst.family()[c].members.front() >
        inst.family()[best].members.front())
      best = c;
  }
  return best;
}

std::unique_ptr<DecompositionNode> compute_node(LaminarInstance inst,
                                                DpContext& ctx) {
  ++ctx.invocations;
  auto node = std::make_unique<DecompositionNode>();

  if (inst.size() == 0) {
    node->kind = DecompositionNode::Kind::empty;
    node->table = DpTable(0, 0);
    node->table.cell(0, 0) = CostValue::finite(0);
  } else if (inst.size() == 1) {
    node->kind = DecompositionNode::Kind::singleton;
    node->table = singleton_table(inst.element(0));
  } else if (inst.family().size() == 1) {
    // Refining {S} to {S1, S2, S} with k(S) everywhere keeps the independent
    // sets (any violation through S1 or S2 already violates S), so the
    // refined instance's table is this instance's table.
    node->kind = DecompositionNode::Kind::partition;
    node->child = compute_node(partitioned_instance(inst), ctx);
    node->table = node->child->table;
  } else {
    node->kind = DecompositionNode::Kind::split;
    node->split_set = select_maximal_set(inst, ctx.options.tie_break);
    node->left = compute_node(restrict_intersection(inst, node->split_set),
                              ctx);
    node->right = compute_node(restrict_difference(inst, node->split_set),
                               ctx);
    // Independent sets here decompose into independent sets of the two
    // children, so the children's axes also bound the reachable profit.
    const __int128 child_sum =
        static_cast<__int128>(node->left->table.profit_cap()) +
        node->right->table.profit_cap();
    const std::int64_t t_out = static_cast<std::int64_t>(std::min<__int128>(
        profit_axis_bound(inst), child_sum));
    node->table = convolve(node->left->table, node->right->table,
                           inst.ground_capacity(), inst.size(), t_out);
  }

  node->instance = std::move(inst);
  return node;
}

}  // namespace

DpTable::DpTable(std::int32_t q_max, std::int64_t profit_cap)
    : q_max_(q_max), profit_cap_(profit_cap) {
  assert(q_max >= 0 && profit_cap >= 0);
  stride_ = static_cast<std::size_t>(profit_cap) + 1;
  const unsigned __int128 count =
      (static_cast<unsigned __int128>(q_max) + 1) * stride_;
  if (count > std::numeric_limits<std::size_t>::max() / sizeof(CostValue))
    throw BlmError(Errc::too_large, "table dimensions overflow memory range");
  cells_.assign(static_cast<std::size_t>(count), CostValue::unreachable());
}

std::size_t DecompositionNode::node_count() const {
  std::size_t count = 1;
  if (left) count += left->node_count();
  if (right) count += right->node_count();
  if (child) count += child->node_count();
  return count;
}

std::size_t DecompositionNode::total_cells() const {
  std::size_t count = table.cell_count();
  if (left) count += left->total_cells();
  if (right) count += right->total_cells();
  if (child) count += child->total_cells();
  return count;
}

DpTable singleton_table(const Element& e) {
  DpTable table(1, e.profit);
  table.cell(0, 0) = CostValue::finite(0);
  table.cell(1, e.profit) = CostValue::finite(e.cost);
  return table;
}

DpTable convolve(const DpTable& left, const DpTable& right, std::int64_t cap,
                 std::int32_t q_out, std::int64_t t_out) {
  if (q_out < left.q_max() + right.q_max())
    throw BlmError(Errc::axis_mismatch,
                   "output size axis smaller than the combined inputs");

  DpTable out(q_out, t_out);

  // Finite cells per row; rows whose cells are all UNREACHABLE contribute
  // nothing, and only finite pairs can produce a finite sum.
  using Row = std::vector<std::pair<std::int64_t, std::int64_t>>;  // (t, cost)
  const auto collect = [](const DpTable& table,
                          std::int64_t max_q) -> std::vector<Row> {
    std::vector<Row> rows(static_cast<std::size_t>(max_q) + 1);
    for (std::int64_t q = 0; q <= max_q; ++q) {
      for (std::int64_t t = 0; t <= table.profit_cap(); ++t) {
        const CostValue v = table.at(q, t);
        if (v.is_finite()) rows[q].emplace_back(t, v.value());
      }
    }
    return rows;
  };

  const std::int64_t left_rows = std::min<std::int64_t>(left.q_max(), cap);
  if (left_rows < 0) return out;  // cap < 0: every row exceeds it
  const std::vector<Row> lhs = collect(left, left_rows);
  const std::vector<Row> rhs =
      collect(right, std::min<std::int64_t>(right.q_max(), cap));

  for (std::int64_t q1 = 0; q1 < static_cast<std::int64_t>(lhs.size()); ++q1) {
    if (lhs[q1].empty()) continue;
    const std::int64_t q2_max =
        std::min<std::int64_t>(static_cast<std::int64_t>(rhs.size()) - 1,
                               cap - q1);
    for (std::int64_t q2 = 0; q2 <= q2_max; ++q2) {
      if (rhs[q2].empty()) continue;
      const std::int32_t q = static_cast<std::int32_t>(q1 + q2);
      for (const auto& [t1, c1] : lhs[q1]) {
        for (const auto& [t2, c2] : rhs[q2]) {
          const std::int64_t t = t1 + t2;
          if (t > t_out) continue;
          out.relax(q, t, CostValue::finite(c1 + c2));
        }
      }
    }
  }
  return out;
}

DpResult compute_dp(const LaminarInstance& inst, const DpOptions& options) {
  DpContext ctx{options, 0};
  DpResult result;
  result.root = compute_node(inst, ctx);
  result.recursive_calls = ctx.invocations - 1;
  return result;
}

std::optional<BestCell> best_feasible(const DpTable& table,
                                      std::int64_t budget) {
  std::optional<BestCell> best;
  for (std::int32_t q = 0; q <= table.q_max(); ++q) {
    for (std::int64_t t = 0; t <= table.profit_cap(); ++t) {
      const CostValue v = table.at(q, t);
      if (!v.is_finite() || v.value() > budget) continue;
      const std::int64_t cost = v.value();
      if (!best || t > best->t || (t == best->t && q < best->q) ||
          (t == best->t && q == best->q && cost < best->cost)) {
        best = BestCell{q, t, cost};
      }
    }
  }
  return best;
}

namespace {

void backtrack_into(const DecompositionNode& node, std::int32_t q,
                    std::int64_t t, std::vector<std::string>& out) {
  const CostValue value = node.table.at(q, t);
  if (!value.is_finite())
    throw BlmError(Errc::unreachable_cell,
                   "cell (" + std::to_string(q) + ", " + std::to_string(t) +
                       ") has no witness");

  switch (node.kind) {
    case DecompositionNode::Kind::empty:
      return;  // q = 0, t = 0 is the only finite cell
    case DecompositionNode::Kind::singleton:
      if (q == 1) out.push_back(node.instance.element(0).id);
      return;
    case DecompositionNode::Kind::partition:
      backtrack_into(*node.child, q, t, out);
      return;
    case DecompositionNode::Kind::split: {
      const DpTable& lhs = node.left->table;
      const DpTable& rhs = node.right->table;
      const std::int64_t q1_max = std::min<std::int64_t>(q, lhs.q_max());
      const std::int64_t t1_max = std::min<std::int64_t>(t, lhs.profit_cap());
      for (std::int64_t q1 = 0; q1 <= q1_max; ++q1) {
        for (std::int64_t t1 = 0; t1 <= t1_max; ++t1) {
          const CostValue lv = lhs.at(q1, t1);
          if (!lv.is_finite()) continue;
          const CostValue rv = rhs.at(q - q1, t - t1);
          if (!rv.is_finite()) continue;
          if (lv + rv == value) {
            backtrack_into(*node.left, static_cast<std::int32_t>(q1), t1, out);
            backtrack_into(*node.right, static_cast<std::int32_t>(q - q1),
                           t - t1, out);
            return;
          }
        }
      }
      throw BlmError(Errc::internal, "no split reproduces a finite cell");
    }
  }
}

}  // namespace

Solution backtrack(const DecompositionNode& root, std::int32_t q,
                   std::int64_t t) {
  Solution sol;
  backtrack_into(root, q, t, sol.ids);
  std::sort(sol.ids.begin(), sol.ids.end());
  sol.cost = root.table.at(q, t).value();
  sol.profit = t;
  return sol;
}

}  // namespace blm
