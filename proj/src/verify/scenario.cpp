#include "verify/scenario.hpp"

#include <algorithm>
#include <array>

#include "core/errors.hpp"

namespace vmeasure::verify {

namespace {

constexpr std::array<std::string_view, 14> kChecks = {
    "expectations",       "integrability_chain",   "dunford_bounded",     "bochner_equivalence",
    "pettis_equivalence", "variation_oracle",      "semivariation_sound", "rank_one_equality",
    "measure_axioms",     "weak_l1_isometry",      "variation_l1_isometry", "null_invariance",
    "three_space_equality", "simple_density"};

constexpr std::array<std::string_view, 12> kExpectKeys = {
    "error",    "locally_pettis", "locally_bochner", "bochner",        "pettis",         "dunford",
    "bounded",  "strongly_additive", "dunford_norm", "bochner_norm", "semivariation_N", "multipliers"};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError("field '" + path + "': " + what);
}

}  // namespace

std::span<const std::string_view> known_checks() { return kChecks; }

Scenario read_scenario(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  static constexpr std::array<std::string_view, 8> kFields = {
      "name", "space", "target", "F", "multipliers", "sets", "checks", "expect"};
  for (const auto& [key, _] : j.items())
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end())
      fail(path + "." + key, "unknown field");
  Scenario s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(path + ".name", "expected a string");
    s.name = j["name"].get<std::string>();
  }
  for (const char* key : {"space", "target", "F"})
    if (!j.contains(key)) fail(path + "." + key, "missing");
  s.space = serial::read_space(j["space"], path + ".space");
  s.target = serial::read_target(j["target"], path + ".target");
  s.F = serial::read_function(j["F"], s.target, path + ".F");
  auto read_list = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    if (!j.contains(key)) return empty;
    if (!j[key].is_array()) fail(path + "." + key, "expected an array");
    return j[key];
  };
  const Json& multipliers = read_list("multipliers");
  for (std::size_t i = 0; i < multipliers.size(); ++i)
    s.multipliers.push_back(
        serial::read_sequence(multipliers[i], path + ".multipliers[" + std::to_string(i) + "]"));
  const Json& sets = read_list("sets");
  for (std::size_t i = 0; i < sets.size(); ++i)
    s.sets.push_back(serial::read_set(sets[i], path + ".sets[" + std::to_string(i) + "]"));
  const Json& checks = read_list("checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string p = path + ".checks[" + std::to_string(i) + "]";
    if (!checks[i].is_string()) fail(p, "expected a check name");
    const auto name = checks[i].get<std::string>();
    if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end())
      fail(p, "unknown check '" + name + "'");
    s.checks.push_back(name);
  }
  if (j.contains("expect")) {
    const Json& e = j["expect"];
    if (!e.is_object()) fail(path + ".expect", "expected an object");
    for (const auto& [key, _] : e.items())
      if (std::find(kExpectKeys.begin(), kExpectKeys.end(), key) == kExpectKeys.end())
        fail(path + ".expect." + key, "unknown expectation");
    if (e.contains("multipliers") &&
        (!e["multipliers"].is_array() || e["multipliers"].size() != s.multipliers.size()))
      fail(path + ".expect.multipliers", "expected one entry per multiplier");
    s.expect = e;
  }
  return s;
}

Json write(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["space"] = serial::write(s.space);
  j["target"] = serial::write(s.target);
  j["F"] = serial::write(s.F);
  j["multipliers"] = Json::array();
  for (const auto& g : s.multipliers) j["multipliers"].push_back(serial::write(g));
  j["sets"] = Json::array();
  for (const auto& a : s.sets) j["sets"].push_back(serial::write(a));
  j["checks"] = s.checks;
  if (!s.expect.empty()) j["expect"] = s.expect;
  return j;
}

std::vector<Scenario> parse_scenarios(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<Scenario> out;
  if (doc.is_object() && doc.contains("scenarios")) {
    if (doc.size() != 1) throw ValidationError("field 'scenarios': no sibling fields allowed");
    doc = doc["scenarios"];
    if (!doc.is_array()) throw ValidationError("field 'scenarios': expected an array");
  }
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      out.push_back(read_scenario(doc[i], "scenarios[" + std::to_string(i) + "]"));
  } else {
    out.push_back(read_scenario(doc));
  }
  return out;
}

}  // namespace vmeasure::verify
