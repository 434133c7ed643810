#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verify/serialize.hpp"

namespace vmeasure::verify {

using serial::Json;

/// Names accepted in a scenario's "checks" list, in execution order.
std::span<const std::string_view> known_checks();

struct Scenario {
  std::string name;
  AtomicMeasureSpace space;
  serial::Target target;
  VectorFunction F = RankDecomposedFunction(FiniteDimSpace{}, {});
  std::vector<GeometricSequence> multipliers;
  std::vector<RepresentableSet> sets;
  std::vector<std::string> checks;
  /// Expected verdicts and values, compared by the "expectations" check.
  Json expect = Json::object();
};

/// Throws ValidationError (with the field path) on malformed input,
/// including unknown check names and unknown expectation keys.
Scenario read_scenario(const Json& j, const std::string& path = "scenario");
Json write(const Scenario& s);

/// A scenario file holds one scenario object, an array of them, or
/// {"scenarios": [...]}. Throws ParseError on malformed JSON.
std::vector<Scenario> parse_scenarios(std::string_view text);

}  // namespace vmeasure::verify
