#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "core/density_measure.hpp"
#include "core/l1_spaces.hpp"

namespace vmeasure::serial {

using Json = nlohmann::ordered_json;

/// Target space of a scenario: R^n with a p-norm, or c0 (diagonal densities).
struct Target {
  bool c0 = false;
  FiniteDimSpace finite;
};

// Readers throw ValidationError naming the offending field path.
Rational read_rational(const Json& j, const std::string& path);
ExtendedRational read_extended(const Json& j, const std::string& path);
GeometricSequence read_sequence(const Json& j, const std::string& path);
RepresentableSet read_set(const Json& j, const std::string& path);
AtomicMeasureSpace read_space(const Json& j, const std::string& path);
Target read_target(const Json& j, const std::string& path);
VectorFunction read_function(const Json& j, const Target& target, const std::string& path);

Json write(const Rational& value);
Json write(const ExtendedRational& value);
Json write(const ExtendedReal& value);
Json write(const GeometricSequence& s);
Json write(const RepresentableSet& set);
Json write(const AtomicMeasureSpace& space);
Json write(const Target& target);
Json write(const FiniteDimVector& v);
Json write(const Vector& v);
Json write(const VectorFunction& f);
Json write(const MultiplierVerdict& v);

}  // namespace vmeasure::serial
