#pragma once

#include <string>
#include <vector>

#include "verify/serialize.hpp"

namespace vmeasure::verify {

using serial::Json;

/// Outcome of one named check on one scenario. `rows` holds the per-set or
/// per-multiplier values from both computation paths.
struct CheckRecord {
  std::string scenario;
  std::string check;
  bool pass = true;
  Json rows = Json::array();
  /// Failing row plus the scenario, enough to rerun it (empty on PASS).
  Json witness;
};

struct Report {
  std::string title;
  /// Extra header fields (seed, case counts); printed before the records.
  Json summary = Json::object();
  std::vector<CheckRecord> records;

  bool passed() const;
  std::size_t failures() const;
  std::string text() const;
  std::string json() const;
};

}  // namespace vmeasure::verify
