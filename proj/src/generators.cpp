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

#include "blm/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace blm {
namespace {

using nlohmann::json;

// Uniform draw in [lo, hi] with a fixed, platform-independent mapping. The
// slight modulo bias is irrelevant here; identical bytes per seed are not.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

// Zero-padded numeric ids sort in numeric order.
std::string element_id(std::int32_t index, std::int32_t n) {
  std::size_t width = 1;
  for (std::int32_t v = n - 1; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index);
  return "e" + std::string(width - digits.size(), '0') + digits;
}

// Spreadsheet-style group prefixes: a..z, aa, ab, ...
std::string group_prefix(std::int32_t index) {
  std::string out;
  std::int32_t i = index;
  do {
    out.insert(out.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw BlmError(Errc::bad_params, message);
}

std::vector<std::int32_t> resolve_groups(const GenParams& p) {
  std::vector<std::int32_t> groups = p.groups;
  if (groups.empty()) {
    for (std::int32_t left = p.n; left > 0; left -= 3)
      groups.push_back(std::min<std::int32_t>(3, left));
  }
  std::int64_t sum = 0;
  for (std::int32_t g : groups) {
    require(g >= 1, "group sizes must be positive");
    sum += g;
  }
  require(sum == p.n, "group sizes must sum to n");
  return groups;
}

// Contiguous index ranges keep the family laminar by construction: children
// of a range are disjoint sub-ranges.
void split_range(std::mt19937_64& rng, const GenParams& p, std::int32_t lo,
                 std::int32_t hi, std::int32_t depth,
                 std::vector<std::pair<std::int32_t, std::int32_t>>& out) {
  const std::int32_t size = hi - lo;
  if (depth <= 0 || size < 2) return;

  const std::int32_t parts = static_cast<std::int32_t>(
      draw(rng, 2, std::min<std::int64_t>(p.max_children, size)));
  std::vector<std::int32_t> cuts;
  for (std::int32_t i = 0; i < parts - 1; ++i)
    cuts.push_back(static_cast<std::int32_t>(draw(rng, lo + 1, hi - 1)));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty()) return;  // all draws collided: leave the range unsplit

  std::int32_t start = lo;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const std::int32_t end = i < cuts.size() ? cuts[i] : hi;
    if (end - start >= 2) {
      out.emplace_back(start, end);
      split_range(rng, p, start, end, depth - 1, out);
    }
    start = end;
  }
}

}  // namespace

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::knapsack: return "knapsack";
    case GenKind::cardinality: return "cardinality";
    case GenKind::multiple_choice: return "multiple_choice";
    case GenKind::partition: return "partition";
    case GenKind::random_laminar: return "random_laminar";
  }
  return "unknown";
}

InstanceFile gen_special(const GenParams& p) {
  require(p.n >= 1, "n must be at least 1");
  require(p.cost_min >= 0 && p.cost_min <= p.cost_max, "bad cost range");
  require(p.profit_min >= 0 && p.profit_min <= p.profit_max,
          "bad profit range");
  require(!p.budget || *p.budget >= 0, "budget must be non-negative");
  require(!p.capacity || *p.capacity >= 1, "capacity must be positive");
  require(!p.capacity_cap || *p.capacity_cap >= 1,
          "capacity cap must be positive");
  require(p.max_depth >= 0, "depth must be non-negative");
  require(p.max_children >= 2, "need at least two children per split");

  std::mt19937_64 rng(p.seed);
  InstanceFile file;
  json meta;
  meta["kind"] = gen_kind_name(p.kind);
  meta["seed"] = p.seed;
  meta["n"] = p.n;
  meta["cost_range"] = {p.cost_min, p.cost_max};
  meta["profit_range"] = {p.profit_min, p.profit_max};

  // Ids first (they decide element order), grouped kinds get per-group ids.
  std::vector<std::string> ids;
  ids.reserve(p.n);
  std::vector<std::int32_t> groups;
  if (p.kind == GenKind::multiple_choice || p.kind == GenKind::partition) {
    groups = resolve_groups(p);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::int32_t i = 0; i < groups[g]; ++i) {
        ids.push_back(group_prefix(static_cast<std::int32_t>(g)) +
                      element_id(i, groups[g]).substr(1));
      }
    }
  } else {
    for (std::int32_t i = 0; i < p.n; ++i) ids.push_back(element_id(i, p.n));
  }

  std::int64_t total_cost = 0;
  for (std::int32_t i = 0; i < p.n; ++i) {
    Element e;
    e.id = ids[i];
    e.cost = draw(rng, p.cost_min, p.cost_max);
    e.profit = draw(rng, p.profit_min, p.profit_max);
    total_cost += e.cost;
    file.data.elements.push_back(std::move(e));
  }

  const auto ground_set = [&](std::int64_t capacity) {
    RawFamilySet all;
    all.name = "all";
    all.members = ids;
    all.capacity = capacity;
    return all;
  };

  switch (p.kind) {
    case GenKind::knapsack:
      file.data.family.push_back(ground_set(p.n));
      break;

    case GenKind::cardinality: {
      const std::int64_t k =
          p.capacity ? *p.capacity : std::max<std::int64_t>(1, p.n / 2);
      meta["capacity"] = k;
      file.data.family.push_back(ground_set(k));
      break;
    }

    case GenKind::multiple_choice:
    case GenKind::partition: {
      std::vector<std::int64_t> caps(groups.size(), 1);
      if (p.kind == GenKind::partition) {
        caps.assign(groups.size(), 2);
        if (p.group_caps.size() == 1) {
          caps.assign(groups.size(), p.group_caps.front());
        } else if (!p.group_caps.empty()) {
          require(p.group_caps.size() == groups.size(),
                  "group capacities must match the group count");
          caps = p.group_caps;
        }
        for (std::int64_t c : caps)
          require(c >= 1, "group capacities must be positive");
        meta["group_caps"] = caps;
      }
      meta["groups"] = groups;
      std::size_t start = 0;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        RawFamilySet set;
        set.name = group_prefix(static_cast<std::int32_t>(g));
        set.members.assign(ids.begin() + start,
                           ids.begin() + start + groups[g]);
        set.capacity = caps[g];
        file.data.family.push_back(std::move(set));
        start += groups[g];
      }
      file.data.family.push_back(ground_set(p.n));
      break;
    }

    case GenKind::random_laminar: {
      const std::int64_t cap_bound = p.capacity_cap
                                         ? std::min<std::int64_t>(
                                               *p.capacity_cap, p.n)
                                         : p.n;
      meta["depth"] = p.max_depth;
      meta["children"] = p.max_children;
      meta["capacity_cap"] = cap_bound;
      file.data.family.push_back(ground_set(draw(rng, 1, cap_bound)));
      std::vector<std::pair<std::int32_t, std::int32_t>> ranges;
      split_range(rng, p, 0, p.n, p.max_depth, ranges);
      for (std::size_t r = 0; r < ranges.size(); ++r) {
        const auto [lo, hi] = ranges[r];
        RawFamilySet set;
        set.name = "f" + std::to_string(r);
        set.members.assign(ids.begin() + lo, ids.begin() + hi);
        const std::int64_t bound = std::min<std::int64_t>(cap_bound, hi - lo);
        set.capacity = draw(rng, 1, bound);
        file.data.family.push_back(std::move(set));
      }
      break;
    }
  }

  const std::int64_t budget = p.budget ? *p.budget : (total_cost + 1) / 2;
  file.data.budget = budget;
  meta["budget"] = budget;
  file.metadata = std::move(meta);

  // A generator bug must never escape as an invalid instance.
  LaminarInstance::build(file.data);
  return file;
}

}  // namespace blm
