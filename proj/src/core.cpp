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

#include "blm/core.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace blm {
namespace {

// Two sorted unique vectors: is a contained in b?
template <typename T>
bool is_subset(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() > b.size()) return false;
  auto it = b.begin();
  for (const T& x : a) {
    it = std::lower_bound(it, b.end(), x);
    if (it == b.end() || *it != x) return false;
    ++it;
  }
  return true;
}

// Two sorted unique vectors: do a and b share an element?
template <typename T>
bool intersects(const std::vector<T>& a, const std::vector<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// |a ∩ b| for sorted unique vectors.
std::int64_t intersection_size(const std::vector<std::int32_t>& a,
                               const std::vector<std::int32_t>& b) {
  std::int64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::string describe_members(const std::vector<std::string>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ",";
    out += members[i];
  }
  out += "}";
  return out;
}

std::string describe_raw_set(const RawFamilySet& set) {
  if (!set.name.empty()) return set.name + " " + describe_members(set.members);
  return describe_members(set.members);
}

// Canonical order for valid laminar families: by smallest member, then size.
// Two distinct laminar sets sharing their smallest member are nested, so the
// pair is a strict total order there; ties beyond that only arise on invalid
// input, where the exact order does not matter.
bool raw_set_less(const RawFamilySet& a, const RawFamilySet& b) {
  const std::string& fa = a.members.empty() ? std::string() : a.members.front();
  const std::string& fb = b.members.empty() ? std::string() : b.members.front();
  if (fa != fb) return fa < fb;
  if (a.members.size() != b.members.size())
    return a.members.size() < b.members.size();
  if (a.members != b.members) return a.members < b.members;
  return a.capacity < b.capacity;
}

bool indexed_set_less(const FamilySet& a, const FamilySet& b) {
  const std::int32_t fa = a.members.empty() ? -1 : a.members.front();
  const std::int32_t fb = b.members.empty() ? -1 : b.members.front();
  if (fa != fb) return fa < fb;
  return a.members.size() < b.members.size();
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::validation: return "VALIDATION";
    case Errc::unknown_element: return "UNKNOWN_ELEMENT";
    case Errc::no_proper_set: return "NO_PROPER_SET";
    case Errc::empty_remainder: return "EMPTY_REMAINDER";
    case Errc::axis_mismatch: return "AXIS_MISMATCH";
    case Errc::unreachable_cell: return "UNREACHABLE_CELL";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::zero_epsilon: return "ZERO_EPSILON";
    case Errc::bad_params: return "BAD_PARAMS";
    case Errc::syntax: return "SYNTAX";
    case Errc::schema: return "SCHEMA";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* issue_kind_name(IssueKind kind) {
  switch (kind) {
    case IssueKind::non_laminar_pair: return "NON_LAMINAR_PAIR";
    case IssueKind::empty_set: return "EMPTY_SET";
    case IssueKind::duplicate_set: return "DUPLICATE_SET";
    case IssueKind::unknown_element: return "UNKNOWN_ELEMENT";
    case IssueKind::nonpositive_capacity: return "NONPOSITIVE_CAPACITY";
    case IssueKind::missing_ground_set: return "MISSING_GROUND_SET";
    case IssueKind::schema: return "SCHEMA";
  }
  return "UNKNOWN";
}

std::string ValidationReport::to_string() const {
  if (issues.empty()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) out << "\n";
    out << issue_kind_name(issues[i].kind) << ": " << issues[i].detail;
  }
  return out.str();
}

ValidationReport validate_laminar(const RawInstance& raw) {
  ValidationReport report;
  auto add = [&report](IssueKind kind, const std::string& detail) {
    report.issues.push_back({kind, detail});
  };

  if (raw.budget < 0) add(IssueKind::schema, "budget is negative");

  std::unordered_set<std::string> ids;
  __int128 cost_sum = 0;
  __int128 profit_sum = 0;
  for (const Element& e : raw.elements) {
    if (e.id.empty()) add(IssueKind::schema, "element with empty id");
    if (!ids.insert(e.id).second)
      add(IssueKind::schema, "duplicate element id '" + e.id + "'");
    if (e.cost < 0)
      add(IssueKind::schema, "element '" + e.id + "' has negative cost");
    if (e.profit < 0)
      add(IssueKind::schema, "element '" + e.id + "' has negative profit");
    cost_sum += e.cost;
    profit_sum += e.profit;
  }
  if (cost_sum > std::numeric_limits<std::int64_t>::max())
    add(IssueKind::schema, "total cost overflows 64-bit range");
  if (profit_sum > std::numeric_limits<std::int64_t>::max())
    add(IssueKind::schema, "total profit overflows 64-bit range");

  // Normalized member lists (sorted, known-and-unique ids only) drive the
  // pairwise checks so one malformed set does not hide another issue.
  std::vector<std::vector<std::string>> normalized(raw.family.size());
  for (std::size_t i = 0; i < raw.family.size(); ++i) {
    const RawFamilySet& set = raw.family[i];
    if (set.members.empty())
      add(IssueKind::empty_set, "set " + describe_raw_set(set) + " is empty");
    if (set.capacity <= 0)
      add(IssueKind::nonpositive_capacity,
          "set " + describe_raw_set(set) + " has capacity " +
              std::to_string(set.capacity));
    std::vector<std::string> norm;
    norm.reserve(set.members.size());
    for (const std::string& id : set.members) {
      if (ids.count(id) == 0) {
        add(IssueKind::unknown_element,
            "set " + describe_raw_set(set) + " names unknown element '" + id +
                "'");
      } else {
        norm.push_back(id);
      }
    }
    std::sort(norm.begin(), norm.end());
    const auto last = std::unique(norm.begin(), norm.end());
    if (last != norm.end()) {
      add(IssueKind::schema,
          "set " + describe_raw_set(set) + " repeats a member");
      norm.erase(last, norm.end());
    }
    normalized[i] = std::move(norm);
  }

  for (std::size_t i = 0; i < raw.family.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.family.size(); ++j) {
      const auto& a = normalized[i];
      const auto& b = normalized[j];
      if (a.empty() || b.empty()) continue;
      if (a == b) {
        add(IssueKind::duplicate_set,
            "sets " + describe_raw_set(raw.family[i]) + " and " +
                describe_raw_set(raw.family[j]) + " have identical members");
        continue;
      }
      if (intersects(a, b) && !is_subset(a, b) && !is_subset(b, a)) {
        add(IssueKind::non_laminar_pair,
            "sets " + describe_raw_set(raw.family[i]) + " and " +
                describe_raw_set(raw.family[j]) +
                " overlap without nesting");
      }
    }
  }

  if (!raw.elements.empty()) {
    std::vector<std::string> ground(ids.begin(), ids.end());
    std::sort(ground.begin(), ground.end());
    bool found = false;
    for (const auto& norm : normalized) {
      if (norm == ground) {
        found = true;
        break;
      }
    }
    if (!found)
      add(IssueKind::missing_ground_set,
          "no family set equals the ground set");
  }

  return report;
}

RawInstance canonicalize(RawInstance raw) {
  std::stable_sort(
      raw.elements.begin(), raw.elements.end(),
      [](const Element& a, const Element& b) { return a.id < b.id; });

  for (RawFamilySet& set : raw.family) {
    std::sort(set.members.begin(), set.members.end());
    set.members.erase(std::unique(set.members.begin(), set.members.end()),
                      set.members.end());
  }

  // Merge family sets with identical members, keeping the smallest capacity
  // and the first non-empty name.
  std::map<std::vector<std::string>, std::size_t> seen;
  std::vector<RawFamilySet> merged;
  merged.reserve(raw.family.size());
  for (RawFamilySet& set : raw.family) {
    auto [it, inserted] = seen.emplace(set.members, merged.size());
    if (inserted) {
      merged.push_back(std::move(set));
    } else {
      RawFamilySet& kept = merged[it->second];
      kept.capacity = std::min(kept.capacity, set.capacity);
      if (kept.name.empty()) kept.name = std::move(set.name);
    }
  }
  raw.family = std::move(merged);

  if (!raw.elements.empty()) {
    std::vector<std::string> ground;
    ground.reserve(raw.elements.size());
    for (const Element& e : raw.elements) ground.push_back(e.id);
    // Ids are sorted already; duplicates (invalid input) survive so that
    // validation still sees them.
    bool found = false;
    for (const RawFamilySet& set : raw.family) {
      if (set.members == ground) {
        found = true;
        break;
      }
    }
    if (!found) {
      RawFamilySet s;
      s.members = ground;
      s.capacity = static_cast<std::int64_t>(ground.size());
      raw.family.push_back(std::move(s));
    }
  }

  std::stable_sort(raw.family.begin(), raw.family.end(), raw_set_less);
  return raw;
}

std::string FamilySet::label(const std::vector<Element>& elements) const {
  if (!name.empty()) return name;
  std::vector<std::string> ids;
  ids.reserve(members.size());
  for (std::int32_t m : members) ids.push_back(elements[m].id);
  return describe_members(ids);
}

LaminarInstance LaminarInstance::build(RawInstance raw) {
  raw = canonicalize(std::move(raw));
  ValidationReport report = validate_laminar(raw);
  if (!report.ok()) throw BlmError(Errc::validation, report.to_string());
  return from_canonical(raw);
}

LaminarInstance LaminarInstance::from_canonical(const RawInstance& raw) {
  LaminarInstance inst;
  inst.budget_ = raw.budget;
  inst.elements_ = raw.elements;

  std::unordered_map<std::string, std::int32_t> index;
  index.reserve(inst.elements_.size());
  for (std::size_t i = 0; i < inst.elements_.size(); ++i)
    index.emplace(inst.elements_[i].id, static_cast<std::int32_t>(i));

  inst.family_.reserve(raw.family.size());
  for (const RawFamilySet& set : raw.family) {
    FamilySet fs;
    fs.name = set.name;
    fs.capacity = set.capacity;
    fs.members.reserve(set.members.size());
    for (const std::string& id : set.members) fs.members.push_back(index.at(id));
    std::sort(fs.members.begin(), fs.members.end());
    inst.family_.push_back(std::move(fs));
  }

  inst.link_family();
  return inst;
}

void LaminarInstance::link_family() {
  std::sort(family_.begin(), family_.end(), indexed_set_less);

  total_cost_ = 0;
  total_profit_ = 0;
  max_profit_ = 0;
  for (const Element& e : elements_) {
    total_cost_ += e.cost;
    total_profit_ += e.profit;
    max_profit_ = std::max(max_profit_, e.profit);
  }

  root_ = -1;
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (family_[i].members.size() == elements_.size()) {
      root_ = static_cast<std::int32_t>(i);
      break;
    }
  }

  // Parent = minimal strict superset. Supersets of a laminar set form a
  // chain, so scanning candidates in order of increasing size finds it.
  std::vector<std::int32_t> by_size(family_.size());
  for (std::size_t i = 0; i < by_size.size(); ++i)
    by_size[i] = static_cast<std::int32_t>(i);
  std::sort(by_size.begin(), by_size.end(),
            [this](std::int32_t a, std::int32_t b) {
              return family_[a].members.size() < family_[b].members.size();
            });
  for (std::size_t pos = 0; pos < by_size.size(); ++pos) {
    FamilySet& set = family_[by_size[pos]];
    set.parent = -1;
    for (std::size_t up = pos + 1; up < by_size.size(); ++up) {
      const FamilySet& bigger = family_[by_size[up]];
      if (bigger.members.size() == set.members.size()) continue;
      if (is_subset(set.members, bigger.members)) {
        set.parent = by_size[up];
        break;
      }
    }
  }
}

std::int32_t LaminarInstance::find(const std::string& id) const {
  auto it = std::lower_bound(
      elements_.begin(), elements_.end(), id,
      [](const Element& e, const std::string& key) { return e.id < key; });
  if (it == elements_.end() || it->id != id) return -1;
  return static_cast<std::int32_t>(it - elements_.begin());
}

RawInstance LaminarInstance::to_raw() const {
  RawInstance raw;
  raw.budget = budget_;
  raw.elements = elements_;
  raw.family.reserve(family_.size());
  for (const FamilySet& set : family_) {
    RawFamilySet rs;
    rs.name = set.name;
    rs.capacity = set.capacity;
    rs.members.reserve(set.members.size());
    for (std::int32_t m : set.members) rs.members.push_back(elements_[m].id);
    raw.family.push_back(std::move(rs));
  }
  return raw;
}

LaminarInstance LaminarInstance::with_profits(
    const std::vector<std::int64_t>& profits) const {
  if (profits.size() != elements_.size())
    throw BlmError(Errc::internal, "profit vector size mismatch");
  LaminarInstance copy = *this;
  __int128 sum = 0;
  for (std::size_t i = 0; i < profits.size(); ++i) {
    if (profits[i] < 0)
      throw BlmError(Errc::internal, "negative replacement profit");
    copy.elements_[i].profit = profits[i];
    sum += profits[i];
  }
  if (sum > std::numeric_limits<std::int64_t>::max())
    throw BlmError(Errc::too_large, "replacement profits overflow 64-bit sum");
  copy.total_profit_ = 0;
  copy.max_profit_ = 0;
  for (const Element& e : copy.elements_) {
    copy.total_profit_ += e.profit;
    copy.max_profit_ = std::max(copy.max_profit_, e.profit);
  }
  return copy;
}

bool is_independent(const LaminarInstance& inst,
                    const std::vector<std::string>& candidate) {
  std::vector<std::int32_t> indices;
  indices.reserve(candidate.size());
  for (const std::string& id : candidate) {
    const std::int32_t idx = inst.find(id);
    if (idx < 0)
      throw BlmError(Errc::unknown_element,
                     "candidate names unknown element '" + id + "'");
    indices.push_back(idx);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return is_independent_indices(inst, indices);
}

bool is_independent_indices(const LaminarInstance& inst,
                            const std::vector<std::int32_t>& candidate) {
  for (const FamilySet& set : inst.family()) {
    if (intersection_size(candidate, set.members) > set.capacity) return false;
  }
  return true;
}

std::vector<std::int32_t> maximal_proper_sets(const LaminarInstance& inst) {
  std::vector<std::int32_t> out;
  const std::int32_t root = inst.root();
  if (root < 0) return out;
  for (std::size_t i = 0; i < inst.family().size(); ++i) {
    if (static_cast<std::int32_t>(i) == root) continue;
    if (inst.family()[i].parent == root)
      out.push_back(static_cast<std::int32_t>(i));
  }
  return out;
}

std::int32_t find_maximal_set(const LaminarInstance& inst) {
  const std::vector<std::int32_t> candidates = maximal_proper_sets(inst);
  if (candidates.empty())
    throw BlmError(Errc::no_proper_set,
                   "family holds no set besides the ground set");
  // Maximal proper sets are pairwise disjoint, so smallest members differ;
  // elements are in id order, so the smallest index is the least id.
  std::int32_t best = candidates.front();
  for (std::int32_t c : candidates) {
    if (inst.family()[c].members.front() <
        inst.family()[best].members.front())
      best = c;
  }
  return best;
}

LaminarInstance restrict_intersection(const LaminarInstance& inst,
                                      std::int32_t family_index) {
  const FamilySet& x = inst.family()[family_index];
  std::vector<std::int32_t> remap(inst.size(), -1);
  LaminarInstance out;
  out.budget_ = inst.budget();
  out.elements_.reserve(x.members.size());
  for (std::int32_t m : x.members) {
    remap[m] = static_cast<std::int32_t>(out.elements_.size());
    out.elements_.push_back(inst.element(m));
  }
  for (const FamilySet& set : inst.family()) {
    if (!is_subset(set.members, x.members)) continue;
    FamilySet fs;
    fs.name = set.name;
    fs.capacity = set.capacity;
    fs.members.reserve(set.members.size());
    for (std::int32_t m : set.members) fs.members.push_back(remap[m]);
    out.family_.push_back(std::move(fs));
  }
  out.link_family();
  return out;
}

LaminarInstance restrict_difference(const LaminarInstance& inst,
                                    std::int32_t family_index) {
  const FamilySet& x = inst.family()[family_index];
  if (x.members.size() == static_cast<std::size_t>(inst.size()))
    throw BlmError(Errc::empty_remainder,
                   "complement of the ground set is empty");

  std::vector<std::int32_t> remap(inst.size(), -1);
  std::vector<std::int32_t> complement;
  complement.reserve(inst.size() - x.members.size());
  {
    auto it = x.members.begin();
    for (std::int32_t i = 0; i < inst.size(); ++i) {
      if (it != x.members.end() && *it == i) {
        ++it;
        continue;
      }
      remap[i] = static_cast<std::int32_t>(complement.size());
      complement.push_back(i);
    }
  }

  LaminarInstance out;
  out.budget_ = inst.budget();
  out.elements_.reserve(complement.size());
  for (std::int32_t m : complement) out.elements_.push_back(inst.element(m));

  bool complement_in_family = false;
  for (const FamilySet& set : inst.family()) {
    if (intersects(set.members, x.members)) continue;  // laminar: not ⊆ S\X
    FamilySet fs;
    fs.name = set.name;
    fs.capacity = set.capacity;
    fs.members.reserve(set.members.size());
    for (std::int32_t m : set.members) fs.members.push_back(remap[m]);
    if (fs.members.size() == complement.size()) complement_in_family = true;
    out.family_.push_back(std::move(fs));
  }
  if (!complement_in_family) {
    // The complement joins the family with the ground set's capacity.
    FamilySet fs;
    fs.capacity = inst.ground_capacity();
    fs.members.resize(complement.size());
    for (std::size_t i = 0; i < complement.size(); ++i)
      fs.members[i] = static_cast<std::int32_t>(i);
    out.family_.push_back(std::move(fs));
  }
  out.link_family();
  return out;
}

LaminarInstance partitioned_instance(const LaminarInstance& inst) {
  if (inst.family().size() != 1)
    throw BlmError(Errc::bad_params,
                   "partitioned form requires the family to be just the "
                   "ground set");
  if (inst.size() < 2)
    throw BlmError(Errc::bad_params,
                   "partitioned form requires at least two elements");

  const std::int64_t cap = inst.ground_capacity();
  const std::int32_t half = (inst.size() + 1) / 2;

  LaminarInstance out;
  out.budget_ = inst.budget();
  out.elements_ = inst.elements();

  FamilySet s1, s2, all;
  s1.capacity = s2.capacity = all.capacity = cap;
  for (std::int32_t i = 0; i < inst.size(); ++i) {
    (i < half ? s1 : s2).members.push_back(i);
    all.members.push_back(i);
  }
  all.name = inst.family().front().name;
  out.family_.push_back(std::move(s1));
  out.family_.push_back(std::move(s2));
  out.family_.push_back(std::move(all));
  out.link_family();
  return out;
}

}  // namespace blm
