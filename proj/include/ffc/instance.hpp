#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/extension.hpp"
#include "ffc/rational.hpp"

namespace ffc {

using Json = nlohmann::ordered_json;

/// An instance on disk: a ground set, named functions with exact complex
/// rational value tables, and the generator names. Values are serialized as
/// two-element arrays ["p/q","p/q"] of normalized rational strings.
struct InstanceFile {
  std::vector<std::string> ground;
  std::vector<std::pair<std::string, Func>> functions;  // sorted by name
  std::vector<std::string> generators;
};

inline Json complex_to_json(const Complex& z) {
  return Json::array({format_rat(z.re), format_rat(z.im)});
}

inline Complex complex_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string(),
          "complex value must be a two-element array of rational strings");
  return Complex(parse_rat(j[0].get<std::string>()), parse_rat(j[1].get<std::string>()));
}

inline InstanceFile parse_instance(const Json& j) {
  require(j.is_object(), "instance must be a JSON object");
  require(j.contains("ground") && j["ground"].is_array(), "missing 'ground' array");
  require(j.contains("functions") && j["functions"].is_object(), "missing 'functions' object");
  require(j.contains("generators") && j["generators"].is_array(), "missing 'generators' array");

  InstanceFile inst;
  for (const auto& l : j["ground"]) {
    require(l.is_string(), "ground labels must be strings");
    inst.ground.push_back(l.get<std::string>());
  }
  GroundSet ground(inst.ground);  // validates uniqueness and size

  for (const auto& [name, table] : j["functions"].items()) {
    require(table.is_array(), "function table must be an array");
    require(table.size() == inst.ground.size(),
            "value table of '" + name + "' does not match the ground size");
    Func f;
    for (const auto& v : table) f.values.push_back(complex_from_json(v));
    inst.functions.emplace_back(name, std::move(f));
  }
  std::sort(inst.functions.begin(), inst.functions.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < inst.functions.size(); ++i)
    require(inst.functions[i].first != inst.functions[i - 1].first,
            "duplicate function name: '" + inst.functions[i].first + "'");

  for (const auto& g : j["generators"]) {
    require(g.is_string(), "generator names must be strings");
    const std::string name = g.get<std::string>();
    const bool known = std::any_of(inst.functions.begin(), inst.functions.end(),
                                   [&](const auto& p) { return p.first == name; });
    require(known, "generator '" + name + "' is not a defined function");
    inst.generators.push_back(name);
  }
  return inst;
}

inline InstanceFile parse_instance_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded(), "malformed JSON");
  return parse_instance(j);
}

inline Json instance_to_json(const InstanceFile& inst) {
  Json j;
  j["ground"] = inst.ground;
  Json fns = Json::object();
  for (const auto& [name, f] : inst.functions) {
    Json table = Json::array();
    for (const auto& v : f.values) table.push_back(complex_to_json(v));
    fns[name] = std::move(table);
  }
  j["functions"] = std::move(fns);
  j["generators"] = inst.generators;
  return j;
}

inline const Func& instance_function(const InstanceFile& inst, const std::string& name) {
  for (const auto& [n, f] : inst.functions)
    if (n == name) return f;
  throw std::invalid_argument("no function named '" + name + "'");
}

inline Algebra to_algebra(const InstanceFile& inst) {
  std::vector<std::pair<std::string, Func>> gens;
  for (const std::string& name : inst.generators)
    gens.emplace_back(name, instance_function(inst, name));
  return make_algebra(GroundSet(inst.ground), std::move(gens));
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

/// Digest over the canonical serialization; formatting-insensitive.
inline std::string instance_digest(const InstanceFile& inst) {
  return hex64(fnv1a64(instance_to_json(inst).dump()));
}

/// Approximation target on δX: {"values": [["p/q","p/q"], ...]}, one entry
/// per spectrum point in canonical order.
inline SpectrumFunc parse_target_text(const std::string& text, int point_count) {
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded(), "malformed JSON");
  require(j.is_object() && j.contains("values") && j["values"].is_array(),
          "target must be an object with a 'values' array");
  require(static_cast<int>(j["values"].size()) == point_count,
          "target has " + std::to_string(j["values"].size()) + " values, expected " +
              std::to_string(point_count) + " (one per spectrum point)");
  SpectrumFunc g;
  for (const auto& v : j["values"]) g.values.push_back(complex_from_json(v));
  return g;
}

inline Json target_to_json(const SpectrumFunc& g) {
  Json j;
  Json vals = Json::array();
  for (const auto& v : g.values) vals.push_back(complex_to_json(v));
  j["values"] = std::move(vals);
  return j;
}

}  // namespace ffc
