#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "verify/checks.hpp"
#include "verify/fuzz.hpp"
#include "verify/gallery.hpp"

using namespace vmeasure;
using namespace vmeasure::verify;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 600;

constexpr std::size_t kMinVariationScenarios = 500;
constexpr double kVariationSeconds = 60.0;
constexpr std::size_t kMinDualSamples = 1000;
constexpr std::size_t kMinTriples = 1000;
constexpr double kGallerySeconds = 5.0;
constexpr std::uint64_t kDeterminismSeed = 42;
constexpr std::size_t kDeterminismCases = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Scenario> corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < kCorpusSize; ++i) out.push_back(generate_scenario(rng, "corpus-" + std::to_string(i)));
  return out;
}

std::vector<Scenario> gallery_scenarios() {
  std::vector<Scenario> out;
  for (const auto& e : gallery()) out.insert(out.end(), e.scenarios.begin(), e.scenarios.end());
  return out;
}

struct Run {
  std::vector<CheckRecord> records;
  RunStats stats;
  std::size_t failures = 0;
  std::string first_failure;
};

// Runs `checks` on every scenario; records stay in scenario order.
Run run_checks(const std::vector<Scenario>& scenarios, const std::vector<std::string>& checks) {
  Run run;
  for (const auto& s : scenarios) {
    Scenario probe = s;
    probe.checks = checks;
    for (auto& r : run_scenario(probe, RunOptions{}, &run.stats)) {
      if (!r.pass && run.failures++ == 0) run.first_failure = r.scenario + "/" + r.check + " " + r.witness["row"].dump();
      run.records.push_back(std::move(r));
    }
  }
  return run;
}

std::size_t count_rows(const Run& run, const std::function<bool(const Json&)>& pred) {
  std::size_t n = 0;
  for (const auto& r : run.records)
    for (const auto& row : r.rows)
      if (pred(row)) ++n;
  return n;
}

std::string failure_note(const Run& run) {
  return run.failures ? "; " + std::to_string(run.failures) + " failing, first " + run.first_failure : "";
}

Outcome criterion1(const std::vector<Scenario>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  const Run run = run_checks(corpus, {"variation_oracle"});
  const double elapsed = seconds_since(start);
  std::size_t scenarios = 0;
  for (const auto& r : run.records)
    if (!r.rows.empty() && !r.rows[0].contains("skipped")) ++scenarios;
  Outcome o;
  o.pass = run.failures == 0 && scenarios >= kMinVariationScenarios && elapsed < kVariationSeconds;
  o.detail = std::to_string(scenarios) + " locally Bochner scenarios (min " + std::to_string(kMinVariationScenarios) +
             "), " + std::to_string(run.stats.variation_sets) + " sets with |A| <= 8, closed form = partition enumeration, " +
             std::to_string(elapsed).substr(0, 5) + " s (limit 60 s)" + failure_note(run);
  return o;
}

Outcome criterion2(const std::vector<Scenario>& corpus, const std::vector<Scenario>& extra) {
  std::vector<Scenario> all = corpus;
  all.insert(all.end(), extra.begin(), extra.end());
  const Run run = run_checks(all, {"semivariation_sound", "rank_one_equality"});
  const std::size_t attained = count_rows(run, [](const Json& row) { return row.value("attained", false); });
  const std::size_t rank_one_rows = count_rows(run, [](const Json& row) {
    return row.contains("semivariation") && row.contains("variation") && !row.contains("samples");
  });
  Outcome o;
  o.pass = run.failures == 0 && run.stats.dual_samples >= kMinDualSamples && rank_one_rows > 0;
  o.detail = std::to_string(run.stats.dual_samples) + " sampled dual evaluations (min " + std::to_string(kMinDualSamples) +
             "), " + std::to_string(attained) + " witnesses attain the value, " + std::to_string(rank_one_rows) +
             " rank-one sets with semivariation = variation" + failure_note(run);
  return o;
}

Outcome criterion3(const std::vector<Scenario>& corpus) {
  const Run run = run_checks(corpus, {"weak_l1_isometry"});
  const std::size_t finite = count_rows(run, [](const Json& r) { return r.value("in_L1w", false); });
  const std::size_t infinite = count_rows(run, [](const Json& r) { return r.contains("in_L1w") && !r["in_L1w"].get<bool>(); });
  const std::size_t pettis = count_rows(run, [](const Json& r) { return r.value("in_L1", false); });
  std::size_t duality = 0;
  for (const auto& rec : run.records)
    for (const auto& row : rec.rows) duality += row.value("duality_checks", std::size_t{0});
  Outcome o;
  o.pass = run.failures == 0 && run.stats.triples >= kMinTriples && finite > 0 && infinite > 0;
  o.detail = std::to_string(run.stats.triples) + " triples (min " + std::to_string(kMinTriples) + "): " +
             std::to_string(finite) + " finite, " + std::to_string(infinite) + " infinite, " + std::to_string(pettis) +
             " in L1 with " + std::to_string(duality) + " sampled-dual integral identities" + failure_note(run);
  return o;
}

Outcome criterion4(const std::vector<Scenario>& corpus) {
  const Run run = run_checks(corpus, {"variation_l1_isometry"});
  const std::size_t finite = count_rows(run, [](const Json& r) { return r.value("in_L1_variation", false); });
  const std::size_t infinite =
      count_rows(run, [](const Json& r) { return r.contains("in_L1_variation") && !r["in_L1_variation"].get<bool>(); });
  Outcome o;
  o.pass = run.failures == 0 && run.stats.bochner_triples >= kMinTriples && finite > 0 && infinite > 0;
  o.detail = std::to_string(run.stats.bochner_triples) + " locally Bochner triples (min " + std::to_string(kMinTriples) +
             "): " + std::to_string(finite) + " finite, " + std::to_string(infinite) + " infinite" + failure_note(run);
  return o;
}

Outcome criterion5() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t failing_entries = 0;
  std::string names;
  for (const auto& e : gallery()) {
    const Report r = run_scenarios(e.scenarios, RunOptions{}, e.name);
    if (!r.passed()) {
      ++failing_entries;
      names += " " + e.name;
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = failing_entries == 0 && gallery().size() == 7 && elapsed < kGallerySeconds;
  o.detail = std::to_string(gallery().size()) + " entries, " + std::to_string(failing_entries) + " failing" + names + ", " +
             std::to_string(elapsed).substr(0, 5) + " s (limit 5 s)";
  return o;
}

Outcome criterion6(const std::vector<Scenario>& corpus, const std::vector<Scenario>& extra) {
  std::vector<Scenario> all = corpus;
  all.insert(all.end(), extra.begin(), extra.end());
  const Run run = run_checks(all, {"measure_axioms"});
  const std::size_t strict = count_rows(run, [](const Json& r) {
    return r.contains("strictness_witness") && !r["strictness_witness"].is_null();
  });
  const std::size_t pairs = count_rows(run, [](const Json& r) { return r.contains("pair"); });
  Outcome o;
  o.pass = run.failures == 0 && strict > 0;
  o.detail = std::to_string(run.records.size()) + " scenarios, " + std::to_string(pairs) +
             " set pairs for additivity and monotonicity, " + std::to_string(strict) +
             " scenarios with a strict N0(mu) < N0(nu_F) witness" + failure_note(run);
  return o;
}

Outcome criterion7(const std::vector<Scenario>& corpus) {
  const Run run = run_checks(corpus, {"simple_density"});
  Outcome o;
  o.pass = run.failures == 0 && run.stats.multiplier_defects > 0;
  o.detail = std::to_string(run.stats.multiplier_defects) +
             " L1(nu_F) multipliers with nonincreasing defects matching the closed-form tail" + failure_note(run);
  return o;
}

Outcome criterion8() {
  FuzzOptions options;
  options.seed = kDeterminismSeed;
  options.cases = kDeterminismCases;
  const Report a = fuzz(options);
  const Report b = fuzz(options);
  options.run.jobs = 4;
  const Report c = fuzz(options);
  Outcome o;
  o.pass = a.text() == b.text() && a.json() == b.json() && a.json() == c.json();
  o.detail = "fuzz seed " + std::to_string(kDeterminismSeed) + ", " + std::to_string(kDeterminismCases) + " cases: " +
             std::to_string(a.json().size()) + "-byte reports " +
             (o.pass ? "identical across two runs and on 4 threads" : "differ");
  return o;
}

}  // namespace

int main() {
  const auto corpus_scenarios = corpus();
  const auto gallery_all = gallery_scenarios();
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [&] { return criterion1(corpus_scenarios); }},
      {2, [&] { return criterion2(corpus_scenarios, gallery_all); }},
      {3, [&] { return criterion3(corpus_scenarios); }},
      {4, [&] { return criterion4(corpus_scenarios); }},
      {5, [] { return criterion5(); }},
      {6, [&] { return criterion6(corpus_scenarios, gallery_all); }},
      {7, [&] { return criterion7(corpus_scenarios); }},
      {8, [] { return criterion8(); }},
  };
  int failed = 0;
  for (const auto& [n, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
