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

#ifndef BLM_INSTANCE_IO_HPP_
#define BLM_INSTANCE_IO_HPP_

#include <string>

#include <json.hpp>

#include "blm/core.hpp"

// On-disk instance format: a JSON object
//
//   {
//     "budget": 10,
//     "elements": [ {"id": "a", "cost": 3, "profit": 7}, ... ],
//     "family":   [ {"name": "X", "members": ["a"], "capacity": 1}, ... ],
//     "metadata": { "seed": 42, ... }
//   }
//
// family and metadata are optional ("family" absent or empty means just the
// implicit ground set); every other key is rejected. All amounts are
// non-negative integers within 64 bits; fractional or out-of-range numbers
// are schema errors. "name" inside a family entry is optional. "metadata" is
// an arbitrary object carried through verbatim (generators record their seed
// and parameters there).
namespace blm {

struct InstanceFile {
  RawInstance data;
  nlohmann::json metadata;  // object, or null when the file had none

  friend bool operator==(const InstanceFile& a, const InstanceFile& b) {
    return a.data == b.data && a.metadata == b.metadata;
  }
};

// Parses the textual format with strict schema checking. Throws
// BlmError(syntax) with line/column for malformed JSON and BlmError(schema)
// for well-formed JSON that violates the schema. Performs no instance
// validation beyond the schema.
InstanceFile parse_file(const std::string& text);

// Renders the canonical textual form (2-space indent, keys sorted, trailing
// newline). parse_file(serialize(x)) == x.
std::string serialize(const InstanceFile& file);

// parse_file + canonicalize + validate in one step: the usual way to load an
// instance for solving. Throws BlmError(validation) when the laminar
// invariants fail.
LaminarInstance load_instance(const std::string& text);

}  // namespace blm

#endif  // BLM_INSTANCE_IO_HPP_
