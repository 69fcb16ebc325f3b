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

#include "blm/instance_io.hpp"

#include <cstdint>
#include <limits>
#include <unordered_set>

namespace blm {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
  throw BlmError(Errc::schema, message);
}

void check_keys(const json& object, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) schema_error(where + ": unknown key '" + item.key() + "'");
  }
}

std::int64_t read_amount(const json& object, const char* key,
                         const std::string& where) {
  if (!object.contains(key)) schema_error(where + ": missing '" + key + "'");
  const json& v = object.at(key);
  if (v.is_number_unsigned()) {
    const std::uint64_t u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      schema_error(where + ": '" + key + "' exceeds the 64-bit range");
    return static_cast<std::int64_t>(u);
  }
  if (v.is_number_integer()) {
    // Signed but in range: the value is negative (unsigned covers the rest).
    schema_error(where + ": '" + key + "' must be a non-negative integer");
  }
  schema_error(where + ": '" + key + "' must be an integer");
}

std::string read_string(const json& object, const char* key,
                        const std::string& where) {
  if (!object.contains(key)) schema_error(where + ": missing '" + key + "'");
  const json& v = object.at(key);
  if (!v.is_string()) schema_error(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

InstanceFile parse_file(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset -> line and column for a usable message.
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw BlmError(Errc::syntax, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) +
                                     ": malformed instance file");
  }

  if (!root.is_object()) schema_error("top level must be an object");
  check_keys(root, "top level", {"budget", "elements", "family", "metadata"});

  InstanceFile file;
  file.data.budget = read_amount(root, "budget", "top level");

  if (!root.contains("elements"))
    schema_error("top level: missing 'elements'");
  const json& elements = root.at("elements");
  if (!elements.is_array()) schema_error("'elements' must be an array");
  std::unordered_set<std::string> seen_ids;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "]";
    const json& e = elements[i];
    if (!e.is_object()) schema_error(where + " must be an object");
    check_keys(e, where, {"id", "cost", "profit"});
    Element element;
    element.id = read_string(e, "id", where);
    if (element.id.empty()) schema_error(where + ": id must be non-empty");
    if (!seen_ids.insert(element.id).second)
      schema_error(where + ": duplicate id '" + element.id + "'");
    element.cost = read_amount(e, "cost", where);
    element.profit = read_amount(e, "profit", where);
    file.data.elements.push_back(std::move(element));
  }

  if (root.contains("family")) {
    const json& family = root.at("family");
    if (!family.is_array()) schema_error("'family' must be an array");
    for (std::size_t i = 0; i < family.size(); ++i) {
      const std::string where = "family[" + std::to_string(i) + "]";
      const json& f = family[i];
      if (!f.is_object()) schema_error(where + " must be an object");
      check_keys(f, where, {"name", "members", "capacity"});
      RawFamilySet set;
      if (f.contains("name")) set.name = read_string(f, "name", where);
      if (!f.contains("members"))
        schema_error(where + ": missing 'members'");
      const json& members = f.at("members");
      if (!members.is_array())
        schema_error(where + ": 'members' must be an array");
      for (const json& m : members) {
        if (!m.is_string())
          schema_error(where + ": members must be strings");
        set.members.push_back(m.get<std::string>());
      }
      // Capacity must be an integer; its positivity is a validation rule,
      // not a schema rule, so negatives pass through here.
      if (!f.contains("capacity"))
        schema_error(where + ": missing 'capacity'");
      const json& cap = f.at("capacity");
      if (cap.is_number_unsigned()) {
        const std::uint64_t u = cap.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(
                    std::numeric_limits<std::int64_t>::max()))
          schema_error(where + ": 'capacity' exceeds the 64-bit range");
        set.capacity = static_cast<std::int64_t>(u);
      } else if (cap.is_number_integer()) {
        set.capacity = cap.get<std::int64_t>();
      } else {
        schema_error(where + ": 'capacity' must be an integer");
      }
      file.data.family.push_back(std::move(set));
    }
  }

  if (root.contains("metadata")) {
    const json& metadata = root.at("metadata");
    if (!metadata.is_object()) schema_error("'metadata' must be an object");
    file.metadata = metadata;
  }

  return file;
}

std::string serialize(const InstanceFile& file) {
  json root;
  root["budget"] = file.data.budget;
  json elements = json::array();
  for (const Element& e : file.data.elements) {
    json obj;
    obj["id"] = e.id;
    obj["cost"] = e.cost;
    obj["profit"] = e.profit;
    elements.push_back(std::move(obj));
  }
  root["elements"] = std::move(elements);
  if (!file.data.family.empty()) {
    json family = json::array();
    for (const RawFamilySet& set : file.data.family) {
      json obj;
      if (!set.name.empty()) obj["name"] = set.name;
      obj["members"] = set.members;
      obj["capacity"] = set.capacity;
      family.push_back(std::move(obj));
    }
    root["family"] = std::move(family);
  }
  if (!file.metadata.is_null()) root["metadata"] = file.metadata;
  return root.dump(2) + "\n";
}

LaminarInstance load_instance(const std::string& text) {
  InstanceFile file = parse_file(text);
  return LaminarInstance::build(std::move(file.data));
}

}  // namespace blm
