#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

// Validator for the subset of JSON Schema the CLI schemas use: "type"
// (string or array of strings, including "null"), "properties", "required",
// "items" (single schema), "enum", and boolean "additionalProperties".

namespace testutil {

inline bool type_matches(const nlohmann::json& inst, const std::string& t) {
  if (t == "object") return inst.is_object();
  if (t == "array") return inst.is_array();
  if (t == "string") return inst.is_string();
  if (t == "integer") return inst.is_number_integer() || inst.is_number_unsigned();
  if (t == "number") return inst.is_number();
  if (t == "boolean") return inst.is_boolean();
  if (t == "null") return inst.is_null();
  return false;
}

inline bool validate_schema(const nlohmann::json& inst, const nlohmann::json& schema,
                            std::string& why, const std::string& path = "$") {
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"])
      if (inst == v) return true;
    why = path + ": value " + inst.dump() + " not in enum";
    return false;
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(inst, t.get<std::string>());
    } else {
      for (const auto& tt : t) ok = ok || type_matches(inst, tt.get<std::string>());
    }
    if (!ok) {
      why = path + ": type mismatch for " + inst.dump();
      return false;
    }
  }
  if (inst.is_object()) {
    if (schema.contains("required")) {
      for (const auto& k : schema["required"]) {
        if (!inst.contains(k.get<std::string>())) {
          why = path + ": missing required key \"" + k.get<std::string>() + "\"";
          return false;
        }
      }
    }
    const bool extra_ok =
        !schema.contains("additionalProperties") || schema["additionalProperties"].get<bool>();
    for (auto it = inst.begin(); it != inst.end(); ++it) {
      if (schema.contains("properties") && schema["properties"].contains(it.key())) {
        if (!validate_schema(it.value(), schema["properties"][it.key()], why,
                             path + "." + it.key()))
          return false;
      } else if (!extra_ok) {
        why = path + ": unexpected key \"" + it.key() + "\"";
        return false;
      }
    }
  }
  if (inst.is_array() && schema.contains("items")) {
    int idx = 0;
    for (const auto& el : inst) {
      if (!validate_schema(el, schema["items"], why,
                           path + "[" + std::to_string(idx) + "]"))
        return false;
      ++idx;
    }
  }
  return true;
}

inline nlohmann::json load_schema(const std::string& name) {
  const std::string full = std::string(QUINTIC_SCHEMA_DIR) + "/" + name;
  std::ifstream in(full);
  if (!in) throw std::runtime_error("cannot open schema " + full);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace testutil
