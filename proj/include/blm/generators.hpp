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

#ifndef BLM_GENERATORS_HPP_
#define BLM_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "blm/instance_io.hpp"

// Seeded instance generators for the classic shapes the laminar model
// subsumes, plus arbitrary random laminar forests. Same seed, same bytes:
// the draws use std::mt19937_64 (whose sequence the standard pins down) with
// a plain modulo mapping, so outputs are identical across platforms.
namespace blm {

enum class GenKind {
  knapsack,         // family = {S} with k(S) = |S|: budget is the only bind
  cardinality,      // family = {S} with k(S) = capacity
  multiple_choice,  // disjoint groups with capacity 1 each, plus S
  partition,        // disjoint groups with given capacities, plus S
  random_laminar,   // random laminar forest with random capacities
};

const char* gen_kind_name(GenKind kind);

struct GenParams {
  GenKind kind = GenKind::random_laminar;
  std::int32_t n = 10;
  std::uint64_t seed = 0;

  std::int64_t cost_min = 0;
  std::int64_t cost_max = 8;
  std::int64_t profit_min = 0;
  std::int64_t profit_max = 8;

  // Budget; defaults to half the total cost, rounded up.
  std::optional<std::int64_t> budget;

  // cardinality: the ground capacity; defaults to max(1, n / 2).
  std::optional<std::int64_t> capacity;

  // multiple_choice / partition: group sizes (must sum to n); empty means
  // groups of 3 with a smaller remainder group.
  std::vector<std::int32_t> groups;
  // partition: per-group capacities; empty means 2 each, a single value
  // broadcasts.
  std::vector<std::int64_t> group_caps;

  // random_laminar shape:
  std::int32_t max_depth = 4;     // nesting levels below the ground set
  std::int32_t max_children = 3;  // split arity bound per level
  std::optional<std::int64_t> capacity_cap;  // draw capacities in [1, cap]
};

// Builds an instance of the requested shape, with costs and profits drawn
// uniformly from the given ranges. The returned file carries the seed and
// parameters in its metadata, and its data always passes validation. Throws
// BlmError(bad_params) on invalid shape parameters.
InstanceFile gen_special(const GenParams& params);

}  // namespace blm

#endif  // BLM_GENERATORS_HPP_
