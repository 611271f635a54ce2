#pragma once
// Verification reports: claim records with expected/computed values, JSON
// serialization in a fixed field order, and a validator for the subset of
// JSON Schema used by the shipped report schema.  All numeric claim values
// are serialized as decimal strings so arbitrarily large group orders
// survive the round trip.

#include <algorithm>
#include <chrono>
#include <functional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ssg {

inline const char* tool_version() { return "1.0.0"; }

/// One verified statement: an identifier, the statement in plain words, the
/// expected and computed values as strings, and the wall-clock cost.
struct Claim {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  bool pass = false;
  long elapsed_ms = 0;
};

/// Runs one claim body, timing it and converting exceptions into a failed
/// claim rather than a crash (the report must still be written).
inline Claim run_claim(const std::string& id, const std::string& statement,
                       const std::string& expected, const std::function<std::string()>& body) {
  Claim c;
  c.id = id;
  c.statement = statement;
  c.expected = expected;
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.computed = body();
  } catch (const std::exception& e) {
    c.computed = std::string("error: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  c.pass = c.computed == c.expected;
  return c;
}

struct VerificationReport {
  std::string target;
  std::vector<Claim> claims;

  bool all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
  }

  /// Claims are reported in identifier order regardless of execution order.
  nlohmann::ordered_json to_json() const {
    auto sorted = claims;
    std::sort(sorted.begin(), sorted.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });
    nlohmann::ordered_json j;
    j["tool"] = {{"name", "ssg"}, {"version", tool_version()}};
    j["target"] = target;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : sorted)
      j["claims"].push_back({{"id", c.id},
                             {"statement", c.statement},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"pass", c.pass},
                             {"elapsed_ms", c.elapsed_ms}});
    j["verdict"] = all_pass() ? "pass" : "fail";
    return j;
  }
};

/// The schema the reports are validated against.  The copy shipped at
/// schemas/report.schema.json must be byte-identical to this text; the CLI
/// validates every report it writes against it.
inline const char* report_schema_text() {
  return R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "ssg verification report",
  "type": "object",
  "required": ["tool", "target", "claims", "verdict"],
  "additionalProperties": false,
  "properties": {
    "tool": {
      "type": "object",
      "required": ["name", "version"],
      "additionalProperties": false,
      "properties": {
        "name": {"type": "string", "enum": ["ssg"]},
        "version": {"type": "string", "pattern": "^[0-9]+\\.[0-9]+\\.[0-9]+$"}
      }
    },
    "target": {"type": "string"},
    "claims": {
      "type": "array",
      "minItems": 1,
      "items": {
        "type": "object",
        "required": ["id", "statement", "expected", "computed", "pass", "elapsed_ms"],
        "additionalProperties": false,
        "properties": {
          "id": {"type": "string", "pattern": "^[a-z0-9][a-z0-9.-]*$"},
          "statement": {"type": "string"},
          "expected": {"type": "string"},
          "computed": {"type": "string"},
          "pass": {"type": "boolean"},
          "elapsed_ms": {"type": "integer", "minimum": 0}
        }
      }
    },
    "verdict": {"type": "string", "enum": ["pass", "fail"]}
  }
})";
}

namespace detail_report {

inline bool type_matches(const nlohmann::ordered_json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "boolean") return doc.is_boolean();
  if (t == "integer") return doc.is_number_integer();
  if (t == "number") return doc.is_number();
  throw std::invalid_argument("schema: unsupported type keyword: " + t);
}

inline void validate_node(const nlohmann::ordered_json& schema, const nlohmann::ordered_json& doc,
                          const std::string& path, std::vector<std::string>& out) {
  if (!schema.is_object()) throw std::invalid_argument("schema: schema nodes must be objects");

  if (schema.contains("type") && !type_matches(doc, schema.at("type").get<std::string>())) {
    out.push_back(path + ": expected type " + schema.at("type").get<std::string>());
    return;  // further keyword checks assume the right shape
  }
  if (schema.contains("enum")) {
    const auto& options = schema.at("enum");
    if (std::find(options.begin(), options.end(), doc) == options.end())
      out.push_back(path + ": value not in enum");
  }
  if (schema.contains("pattern") && doc.is_string()) {
    std::regex re(schema.at("pattern").get<std::string>());
    if (!std::regex_search(doc.get<std::string>(), re))
      out.push_back(path + ": string does not match pattern " + schema.at("pattern").get<std::string>());
  }
  if (schema.contains("minimum") && doc.is_number()) {
    if (doc.get<double>() < schema.at("minimum").get<double>())
      out.push_back(path + ": value below minimum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!doc.contains(key.get<std::string>()))
          out.push_back(path + ": missing required property " + key.get<std::string>());
    const nlohmann::ordered_json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
    bool closed = schema.contains("additionalProperties") &&
                  schema.at("additionalProperties").is_boolean() &&
                  !schema.at("additionalProperties").get<bool>();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props && props->contains(it.key()))
        validate_node(props->at(it.key()), it.value(), path + "/" + it.key(), out);
      else if (closed)
        out.push_back(path + ": unexpected property " + it.key());
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema.at("minItems").get<std::size_t>())
      out.push_back(path + ": array has fewer than minItems elements");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < doc.size(); ++i)
        validate_node(schema.at("items"), doc[i], path + "/" + std::to_string(i), out);
  }
}

}  // namespace detail_report

/// Violations of `doc` against `schema` (empty result means valid).  Supports
/// the keywords used by the report schema: type, required, properties,
/// additionalProperties (boolean), items, enum, pattern, minimum, minItems.
inline std::vector<std::string> schema_violations(const nlohmann::ordered_json& schema,
                                                  const nlohmann::ordered_json& doc) {
  std::vector<std::string> out;
  detail_report::validate_node(schema, doc, "#", out);
  return out;
}

}  // namespace ssg
