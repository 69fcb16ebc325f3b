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

#ifndef BLM_TESTS_TEST_SUPPORT_HPP_
#define BLM_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "blm/core.hpp"
#include "blm/dp.hpp"
#include "blm/generators.hpp"

// Shared helpers for the test suites. The checkers here are written
// independently of the library internals (set-based counting, plain
// quadratic loops) so that agreement between library and test code is
// meaningful evidence, not a tautology.
namespace blm::test {

// Compact builders for hand-written instances.
inline Element el(const std::string& id, std::int64_t cost,
                  std::int64_t profit) {
  return Element{id, cost, profit};
}

inline RawFamilySet fam(std::vector<std::string> members, std::int64_t cap,
                        std::string name = "") {
  RawFamilySet set;
  set.name = std::move(name);
  set.members = std::move(members);
  set.capacity = cap;
  return set;
}

inline RawInstance raw(std::int64_t budget, std::vector<Element> elements,
                       std::vector<RawFamilySet> family) {
  RawInstance r;
  r.budget = budget;
  r.elements = std::move(elements);
  r.family = std::move(family);
  return r;
}

// Reference independence check: count each family set's members in the
// candidate with std::set operations, no shared code with the library.
inline bool ref_independent(const RawInstance& inst,
                            const std::vector<std::string>& candidate) {
  const std::set<std::string> chosen(candidate.begin(), candidate.end());
  for (const RawFamilySet& set : inst.family) {
    const std::set<std::string> members(set.members.begin(),
                                        set.members.end());
    std::int64_t inside = 0;
    for (const std::string& id : chosen)
      if (members.count(id)) ++inside;
    if (inside > set.capacity) return false;
  }
  return true;
}

// Textbook 0/1-knapsack table: best profit achievable at each cost
// 0..budget, one row per element, no capacity constraints. Used as the
// oracle for knapsack-shaped instances (family = ground set with capacity
// >= |S|).
inline std::int64_t knapsack_opt(const std::vector<Element>& elements,
                                 std::int64_t budget) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(budget) + 1, 0);
  for (const Element& e : elements) {
    if (e.cost > budget) continue;
    for (std::int64_t c = budget; c >= e.cost; --c) {
      best[c] = std::max(best[c], best[c - e.cost] + e.profit);
    }
  }
  return best[static_cast<std::size_t>(budget)];
}

// Whether two tables answer identically over the union of their domains
// (and therefore everywhere, since reads outside a table are UNREACHABLE).
inline bool tables_equal(const DpTable& a, const DpTable& b) {
  const std::int64_t q_hi = std::max<std::int64_t>(a.q_max(), b.q_max());
  const std::int64_t t_hi = std::max(a.profit_cap(), b.profit_cap());
  for (std::int64_t q = 0; q <= q_hi; ++q)
    for (std::int64_t t = 0; t <= t_hi; ++t)
      if (!(a.at(q, t) == b.at(q, t))) return false;
  return true;
}

// First cell where two tables disagree, as text; empty when equal.
inline std::string table_diff(const DpTable& a, const DpTable& b) {
  const std::int64_t q_hi = std::max<std::int64_t>(a.q_max(), b.q_max());
  const std::int64_t t_hi = std::max(a.profit_cap(), b.profit_cap());
  for (std::int64_t q = 0; q <= q_hi; ++q) {
    for (std::int64_t t = 0; t <= t_hi; ++t) {
      const CostValue av = a.at(q, t);
      const CostValue bv = b.at(q, t);
      if (av == bv) continue;
      auto show = [](CostValue v) {
        return v.is_finite() ? std::to_string(v.value()) : std::string("inf");
      };
      return "cell (" + std::to_string(q) + "," + std::to_string(t) +
             "): " + show(av) + " vs " + show(bv);
    }
  }
  return "";
}

// A seeded small random instance for cross-checking against the
// brute-force oracles. Cycles through the generator shapes so the mix
// covers deep nesting, partitions, grouped and plain knapsack families.
inline LaminarInstance small_instance(std::uint64_t seed, std::int32_t n) {
  GenParams params;
  switch (seed % 4) {
    case 0: params.kind = GenKind::random_laminar; break;
    case 1: params.kind = GenKind::partition; break;
    case 2: params.kind = GenKind::multiple_choice; break;
    default: params.kind = GenKind::knapsack; break;
  }
  params.n = n;
  params.seed = seed;
  return LaminarInstance::build(gen_special(params).data);
}

}  // namespace blm::test

#endif  // BLM_TESTS_TEST_SUPPORT_HPP_
