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

#include "blm/oracle.hpp"

#include <bit>

namespace blm {
namespace {

constexpr int kHardLimit = 30;  // 2^30 subsets is already absurd

void check_size(const LaminarInstance& inst, int limit) {
  const int effective = std::min(limit, kHardLimit);
  if (inst.size() > effective)
    throw BlmError(Errc::too_large,
                   "instance has " + std::to_string(inst.size()) +
                       " elements; enumeration limit is " +
                       std::to_string(effective));
}

// Bitmask per family set over the id-sorted element indices.
std::vector<std::uint64_t> family_masks(const LaminarInstance& inst) {
  std::vector<std::uint64_t> masks;
  masks.reserve(inst.family().size());
  for (const FamilySet& set : inst.family()) {
    std::uint64_t mask = 0;
    for (std::int32_t m : set.members) mask |= std::uint64_t{1} << m;
    masks.push_back(mask);
  }
  return masks;
}

bool mask_independent(const LaminarInstance& inst,
                      const std::vector<std::uint64_t>& masks,
                      std::uint64_t subset) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (std::popcount(subset & masks[i]) > inst.family()[i].capacity)
      return false;
  }
  return true;
}

std::vector<std::int32_t> mask_indices(std::uint64_t subset, int n) {
  std::vector<std::int32_t> out;
  for (int i = 0; i < n; ++i) {
    if (subset & (std::uint64_t{1} << i)) out.push_back(i);
  }
  return out;
}

}  // namespace

OracleResult enumerate_opt(const LaminarInstance& inst, int limit) {
  check_size(inst, limit);
  const int n = inst.size();
  const std::vector<std::uint64_t> masks = family_masks(inst);

  // The empty set is independent and free, so it seeds the incumbent.
  std::uint64_t best_mask = 0;
  std::int64_t best_profit = 0;
  std::int64_t best_cost = 0;

  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t subset = 1; subset < end; ++subset) {
    std::int64_t cost = 0;
    std::int64_t profit = 0;
    for (int i = 0; i < n; ++i) {
      if (subset & (std::uint64_t{1} << i)) {
        cost += inst.element(i).cost;
        profit += inst.element(i).profit;
      }
    }
    if (cost > inst.budget()) continue;
    if (!mask_independent(inst, masks, subset)) continue;
    bool better = false;
    if (profit != best_profit) {
      better = profit > best_profit;
    } else if (cost != best_cost) {
      better = cost < best_cost;
    } else {
      better = mask_indices(subset, n) < mask_indices(best_mask, n);
    }
    if (better) {
      best_mask = subset;
      best_profit = profit;
      best_cost = cost;
    }
  }

  OracleResult result;
  result.profit = best_profit;
  result.cost = best_cost;
  for (std::int32_t i : mask_indices(best_mask, n))
    result.ids.push_back(inst.element(i).id);
  return result;
}

DpTable enumerate_table(const LaminarInstance& inst, int limit) {
  check_size(inst, limit);
  const int n = inst.size();
  const std::vector<std::uint64_t> masks = family_masks(inst);

  DpTable table(n, inst.total_profit());
  const std::uint64_t end = n == 0 ? 1 : (std::uint64_t{1} << n);
  for (std::uint64_t subset = 0; subset < end; ++subset) {
    if (!mask_independent(inst, masks, subset)) continue;
    std::int64_t cost = 0;
    std::int64_t profit = 0;
    for (int i = 0; i < n; ++i) {
      if (subset & (std::uint64_t{1} << i)) {
        cost += inst.element(i).cost;
        profit += inst.element(i).profit;
      }
    }
    table.relax(std::popcount(subset), profit, CostValue::finite(cost));
  }
  return table;
}

}  // namespace blm
