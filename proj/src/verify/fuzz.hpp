#pragma once

#include <cstdint>
#include <random>

#include "verify/checks.hpp"

namespace vmeasure::verify {

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  RunOptions run;
};

/// A random scenario whose density measure constructs. Sizes are bounded:
/// dim <= 4, at most 6 exceptional indices per sequence, ratios from a fixed
/// pool. Runs every check except "expectations".
Scenario generate_scenario(std::mt19937_64& rng, const std::string& name);

/// Greedily drops multipliers, sets, rank terms and exceptional values while
/// `check` keeps failing.
Scenario minimize(const Scenario& failing, const std::string& check, const RunOptions& options);

/// Runs `cases` generated scenarios in order. Passing records keep no rows;
/// the first failure carries a minimized witness scenario.
Report fuzz(const FuzzOptions& options, RunStats* stats = nullptr);

}  // namespace vmeasure::verify
