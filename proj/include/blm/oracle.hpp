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

#ifndef BLM_ORACLE_HPP_
#define BLM_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "blm/core.hpp"
#include "blm/dp.hpp"

// Brute-force reference answers by exhaustive subset enumeration. Nothing
// here shares logic with the solver beyond the instance type and the
// per-definition independence test; keep it simple enough to trust by
// inspection.
namespace blm {

struct OracleResult {
  std::vector<std::string> ids;  // sorted
  std::int64_t profit = 0;
  std::int64_t cost = 0;
};

// Optimal solution by enumerating all 2^|S| subsets in id order (element i
// of the id-sorted ground set is bit i of a binary counter). Ties go to the
// smaller cost, then to the lexicographically smaller id list. Throws
// BlmError(too_large) when |S| > limit.
OracleResult enumerate_opt(const LaminarInstance& inst, int limit = 20);

// The full table of cheapest independent subsets grouped by (size, profit),
// built by the same enumeration. Cells without an independent subset stay
// UNREACHABLE. Throws BlmError(too_large) when |S| > limit.
DpTable enumerate_table(const LaminarInstance& inst, int limit = 20);

}  // namespace blm

#endif  // BLM_ORACLE_HPP_
