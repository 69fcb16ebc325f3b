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

#ifndef BLM_DP_HPP_
#define BLM_DP_HPP_

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blm/core.hpp"

// Exact solver: a dynamic program over a recursive decomposition of the
// laminar family. Each sub-instance gets a table indexed by subset size q
// and profit t whose cells hold the cheapest independent subset achieving
// exactly (q, t); tables of sibling sub-instances combine by min-plus
// convolution because the sub-ground-sets are disjoint.
namespace blm {

// Cheapest cost achieving a table cell, or UNREACHABLE when no independent
// subset does. UNREACHABLE is a distinct state, not a large integer: it
// absorbs addition, loses every min, and has no numeric value.
class CostValue {
 public:
  constexpr CostValue() : v_(kUnreachable) {}

  static constexpr CostValue finite(std::int64_t cost) {
    assert(cost >= 0);
    CostValue out;
    out.v_ = cost;
    return out;
  }
  static constexpr CostValue unreachable() { return CostValue(); }

  constexpr bool is_finite() const { return v_ != kUnreachable; }
  constexpr std::int64_t value() const {
    assert(is_finite());
    return v_;
  }

  friend constexpr CostValue operator+(CostValue a, CostValue b) {
    if (!a.is_finite() || !b.is_finite()) return unreachable();
    return finite(a.v_ + b.v_);
  }

  // min with UNREACHABLE treated as larger than every finite cost.
  static constexpr CostValue min(CostValue a, CostValue b) {
    if (!a.is_finite()) return b;
    if (!b.is_finite()) return a;
    return a.v_ <= b.v_ ? a : b;
  }

  friend constexpr bool operator==(CostValue a, CostValue b) {
    return a.v_ == b.v_;
  }

 private:
  static constexpr std::int64_t kUnreachable = -1;  // costs are non-negative
  std::int64_t v_;
};

// Dense (q, t) table, row-major by q. Rows run 0..q_max (the sub-instance
// size), columns 0..profit_cap. Reads outside the stored range answer
// UNREACHABLE, matching the convention that out-of-domain cells are
// unreachable by definition.
class DpTable {
 public:
  DpTable() : DpTable(0, 0) {}
  DpTable(std::int32_t q_max, std::int64_t profit_cap);

  std::int32_t q_max() const { return q_max_; }
  std::int64_t profit_cap() const { return profit_cap_; }

  CostValue at(std::int64_t q, std::int64_t t) const {
    if (q < 0 || q > q_max_ || t < 0 || t > profit_cap_)
      return CostValue::unreachable();
    return cells_[static_cast<std::size_t>(q) * stride_ +
                  static_cast<std::size_t>(t)];
  }

  CostValue& cell(std::int32_t q, std::int64_t t) {
    assert(q >= 0 && q <= q_max_ && t >= 0 && t <= profit_cap_);
    return cells_[static_cast<std::size_t>(q) * stride_ +
                  static_cast<std::size_t>(t)];
  }

  // Keeps the smaller of the current cell and the candidate.
  void relax(std::int32_t q, std::int64_t t, CostValue candidate) {
    CostValue& slot = cell(q, t);
    slot = CostValue::min(slot, candidate);
  }

  std::size_t cell_count() const { return cells_.size(); }

 private:
  std::int32_t q_max_;
  std::int64_t profit_cap_;
  std::size_t stride_;
  std::vector<CostValue> cells_;
};

// One node of the solved decomposition: the sub-instance, its finished
// table, and how the table was obtained. The whole tree is kept so a witness
// subset can be reconstructed for any reachable cell.
struct DecompositionNode {
  enum class Kind {
    empty,      // |S| = 0: the trivial table {(0,0) -> 0}
    singleton,  // |S| = 1: base-case table for the lone element
    partition,  // |F| = 1, |S| > 1: solved via the refined-family instance
    split,      // table = convolution of a maximal proper set and its rest
  };

  Kind kind = Kind::empty;
  LaminarInstance instance;
  DpTable table;

  std::int32_t split_set = -1;  // split: family index of X within instance
  std::unique_ptr<DecompositionNode> left;   // split: instance ∩ X
  std::unique_ptr<DecompositionNode> right;  // split: instance \ X
  std::unique_ptr<DecompositionNode> child;  // partition: refined instance

  std::size_t node_count() const;
  std::size_t total_cells() const;
};

// Tie-break order used when several maximal proper sets are available. Any
// choice yields the same tables; the knob exists so tests can prove that.
enum class MaximalTieBreak {
  least_min_id,     // default, matches find_maximal_set
  greatest_min_id,  // deliberately opposite order
};

struct DpOptions {
  MaximalTieBreak tie_break = MaximalTieBreak::least_min_id;
};

struct DpResult {
  std::unique_ptr<DecompositionNode> root;
  std::size_t recursive_calls = 0;  // invocations below the outermost call

  const DpTable& table() const { return root->table; }
};

// Base-case table for a one-element instance: (0,0) -> 0 and
// (1, profit) -> cost; everything else UNREACHABLE.
DpTable singleton_table(const Element& e);

// Min-plus convolution of two sibling tables over disjoint ground sets:
// result[q][t] = min over q1+q2=q, t1+t2=t of left[q1][t1] + right[q2][t2]
// for q <= cap, and UNREACHABLE for q > cap. Output rows run 0..q_out and
// columns 0..t_out; pairs landing outside stay out (such cells are
// unreachable for the caller by construction). Throws
// BlmError(axis_mismatch) when q_out < left.q_max + right.q_max.
DpTable convolve(const DpTable& left, const DpTable& right, std::int64_t cap,
                 std::int32_t q_out, std::int64_t t_out);

// Solves the instance: builds the full decomposition tree with a table per
// node. Empty instances yield the trivial table rather than an error.
DpResult compute_dp(const LaminarInstance& inst, const DpOptions& options = {});

struct BestCell {
  std::int32_t q = 0;
  std::int64_t t = 0;
  std::int64_t cost = 0;
};

// The cell with maximum profit among those with finite cost <= budget; ties
// prefer smaller q, then smaller cost. Empty only when no cell is feasible
// (impossible for tables produced by compute_dp when budget >= 0, since
// (0,0) -> 0 always qualifies).
std::optional<BestCell> best_feasible(const DpTable& table,
                                      std::int64_t budget);

struct Solution {
  std::vector<std::string> ids;  // sorted
  std::int64_t cost = 0;
  std::int64_t profit = 0;  // in the units of the solved instance
};

// Reconstructs a witness subset for table cell (q, t) of the decomposition
// root: walks the tree top-down, rescanning each convolution for the first
// split (in lexicographic (q1, t1) order) that reproduces the cell value.
// Throws BlmError(unreachable_cell) when the cell is UNREACHABLE.
Solution backtrack(const DecompositionNode& root, std::int32_t q,
                   std::int64_t t);

}  // namespace blm

#endif  // BLM_DP_HPP_
