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

#ifndef BLM_CORE_HPP_
#define BLM_CORE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Core types for the budgeted laminar matroid problem: a ground set of
// priced elements, a laminar family of capacity constraints over it, and a
// budget. A subset is independent when it meets every capacity constraint;
// the solvers look for a maximum-profit independent subset within budget.
namespace blm {

// Every recoverable failure in the library is reported as a BlmError with a
// machine-readable code; the CLI maps codes to exit statuses.
enum class Errc {
  validation,        // instance violates the laminar-instance invariants
  unknown_element,   // candidate subset names an id outside the ground set
  no_proper_set,     // family has no set besides the ground set
  empty_remainder,   // complement restriction taken on the full ground set
  axis_mismatch,     // convolution output axes inconsistent with the inputs
  unreachable_cell,  // backtrack asked for a cell with no witness
  too_large,         // brute-force oracle refused the instance size
  zero_epsilon,      // epsilon must be positive
  bad_params,        // generator shape parameters are invalid
  syntax,            // instance file is not well-formed
  schema,            // instance file is well-formed but violates the schema
  internal,          // invariant breach; always a bug
};

const char* errc_name(Errc code);

class BlmError : public std::runtime_error {
 public:
  BlmError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Element {
  std::string id;      // opaque identifier, unique within an instance
  std::int64_t cost = 0;    // non-negative
  std::int64_t profit = 0;  // non-negative

  friend bool operator==(const Element&, const Element&) = default;
};

// A family set as it appears in raw input: members named by element id.
struct RawFamilySet {
  std::string name;  // optional label used in diagnostics; may be empty
  std::vector<std::string> members;
  std::int64_t capacity = 0;

  friend bool operator==(const RawFamilySet&, const RawFamilySet&) = default;
};

// Instance data before canonicalization and validation. This mirrors the
// on-disk format (minus file metadata, which the io layer keeps separately).
struct RawInstance {
  std::int64_t budget = 0;
  std::vector<Element> elements;
  std::vector<RawFamilySet> family;

  friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

enum class IssueKind {
  non_laminar_pair,      // two family sets overlap without nesting
  empty_set,             // family set with no members
  duplicate_set,         // two family sets with identical member sets
  unknown_element,       // family member id not in the ground set
  nonpositive_capacity,  // capacity < 1
  missing_ground_set,    // no family set equals the ground set
  schema,                // malformed raw data (duplicate ids, negative amounts)
};

const char* issue_kind_name(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Checks every laminar-instance invariant on raw data and reports all
// violations (not just the first). Expects canonicalized input in the normal
// pipeline; called directly on raw data it additionally reports conditions
// the canonicalizer would have repaired (duplicate sets, missing ground set).
ValidationReport validate_laminar(const RawInstance& raw);

// Normal form used by the solver: elements sorted by id, duplicate family
// sets merged keeping the minimum capacity, and the ground set appended with
// capacity |S| when no family set covers every element. Member lists are
// sorted and deduplicated. Does not validate.
RawInstance canonicalize(RawInstance raw);

// A family set over dense element indices, as stored inside LaminarInstance.
struct FamilySet {
  std::string name;
  std::vector<std::int32_t> members;  // sorted element indices
  std::int64_t capacity = 0;
  std::int32_t parent = -1;  // minimal strict superset; -1 for the ground set

  // Human-readable label for diagnostics: the name if present, otherwise the
  // member list.
  std::string label(const std::vector<Element>& elements) const;
};

// A validated instance in canonical form. Elements are sorted by id and
// addressed by index; the family is stored as a forest via parent links.
class LaminarInstance {
 public:
  // The empty instance: no elements, no family, budget 0.
  LaminarInstance() = default;

  // Canonicalizes, validates, and indexes raw data. Throws
  // BlmError(validation) carrying the full report when invalid.
  static LaminarInstance build(RawInstance raw);

  std::int32_t size() const {
    return static_cast<std::int32_t>(elements_.size());
  }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::int32_t index) const { return elements_[index]; }
  const std::vector<FamilySet>& family() const { return family_; }
  std::int64_t budget() const { return budget_; }

  // Index of the family set equal to the ground set; -1 only when |S| = 0.
  std::int32_t root() const { return root_; }

  // Capacity of the ground set; |S| = 0 gives 0.
  std::int64_t ground_capacity() const {
    return root_ < 0 ? 0 : family_[root_].capacity;
  }

  // Element index for an id, or -1 when the id is not in the ground set.
  std::int32_t find(const std::string& id) const;

  std::int64_t total_cost() const { return total_cost_; }
  std::int64_t total_profit() const { return total_profit_; }
  std::int64_t max_profit() const { return max_profit_; }

  // The instance as raw data (canonical form); useful for re-validation,
  // serialization, and derived instances.
  RawInstance to_raw() const;

  // A copy of this instance with per-element profits replaced. Family,
  // costs, and budget are unchanged. Sizes must match.
  LaminarInstance with_profits(const std::vector<std::int64_t>& profits) const;

 private:
  friend LaminarInstance restrict_intersection(const LaminarInstance&,
                                               std::int32_t);
  friend LaminarInstance restrict_difference(const LaminarInstance&,
                                             std::int32_t);
  friend LaminarInstance partitioned_instance(const LaminarInstance&);

  // Indexes canonical raw data that is already known to be valid.
  static LaminarInstance from_canonical(const RawInstance& raw);

  // Recomputes parent links, the root index, and cached totals.
  void link_family();

  std::vector<Element> elements_;
  std::vector<FamilySet> family_;
  std::int32_t root_ = -1;
  std::int64_t budget_ = 0;
  std::int64_t total_cost_ = 0;
  std::int64_t total_profit_ = 0;
  std::int64_t max_profit_ = 0;
};

// Whether the candidate subset meets every family capacity: |Q ∩ X| <= k(X)
// for each family set X, checked by direct counting. Unknown ids throw
// BlmError(unknown_element); duplicate ids in the candidate are collapsed.
bool is_independent(const LaminarInstance& inst,
                    const std::vector<std::string>& candidate);

// Fast path over element indices. The candidate must be sorted, unique, and
// in range.
bool is_independent_indices(const LaminarInstance& inst,
                            const std::vector<std::int32_t>& candidate);

// Index of a maximal proper family set: one contained in no family set other
// than the ground set. Ties are broken toward the set whose smallest member
// id is lexicographically least (maximal proper sets are pairwise disjoint,
// so this is unique). Throws BlmError(no_proper_set) when the family is just
// the ground set.
std::int32_t find_maximal_set(const LaminarInstance& inst);

// All maximal proper family sets, in family order. Empty when |F| = 1.
std::vector<std::int32_t> maximal_proper_sets(const LaminarInstance& inst);

// The instance restricted to the members of family set X: ground set X,
// family {Y in F : Y ⊆ X}, costs/profits/budget unchanged. X becomes the
// ground set of the result and keeps its capacity.
LaminarInstance restrict_intersection(const LaminarInstance& inst,
                                      std::int32_t family_index);

// The instance restricted to the complement of family set X: ground set
// S \ X, family {Y in F : Y ⊆ S \ X} plus S \ X itself, which keeps its own
// capacity when it already is a family set and inherits the ground set's
// capacity otherwise. X must be a proper subset of the ground set; throws
// BlmError(bad_params) when S \ X would be empty.
LaminarInstance restrict_difference(const LaminarInstance& inst,
                                    std::int32_t family_index);

// For an instance whose family is just the ground set with |S| > 1: the same
// instance with the family refined to {S1, S2, S}, where S1 holds the first
// ceil(|S|/2) elements in id order and S2 the rest, and every capacity equals
// k(S). Independent sets are unchanged by this refinement. Throws
// BlmError(bad_params) on instances with |F| != 1 or |S| < 2.
LaminarInstance partitioned_instance(const LaminarInstance& inst);

}  // namespace blm

#endif  // BLM_CORE_HPP_
