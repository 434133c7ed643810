#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "verify/report.hpp"
#include "verify/scenario.hpp"

namespace vmeasure::verify {

/// Replacement computations injected by tests (mutation testing). Empty
/// members leave the library path in place.
struct Hooks {
  std::function<ExtendedReal(const DensityMeasure&, const RepresentableSet&)> semivariation;
};

struct RunOptions {
  /// Euclidean norms as doubles, compared within kApproxTolerance.
  bool approximate = false;
  /// Dual-ball samples per set in semivariation_sound.
  std::size_t dual_samples = 32;
  /// Dual samples per (multiplier, set) for the integral identity.
  std::size_t integral_samples = 3;
  std::uint64_t seed = 0;
  /// Scenarios run concurrently on this many threads; records keep scenario order.
  std::size_t jobs = 1;
  Hooks hooks;
};

/// Work counters, summed over scenarios.
struct RunStats {
  std::size_t variation_sets = 0;
  std::size_t dual_samples = 0;
  std::size_t triples = 0;
  std::size_t bochner_triples = 0;
  std::size_t multiplier_defects = 0;

  RunStats& operator+=(const RunStats& o);
};

/// Scenario with Euclidean norms switched to approximate mode.
Scenario with_approximate_norms(const Scenario& s);

/// Runs the scenario's checks in listed order.
std::vector<CheckRecord> run_scenario(const Scenario& s, const RunOptions& options,
                                      RunStats* stats = nullptr);

/// One record list per scenario, in scenario order.
std::vector<std::vector<CheckRecord>> run_all(const std::vector<Scenario>& scenarios, const RunOptions& options,
                                              RunStats* stats = nullptr);

Report run_scenarios(const std::vector<Scenario>& scenarios, const RunOptions& options,
                     const std::string& title);

}  // namespace vmeasure::verify
