#include "verify/fuzz.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "core/errors.hpp"
#include "verify/sampling.hpp"

namespace vmeasure::verify {

namespace {

const std::array<Rational, 7> kRatioPool = {Rational(0),    Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                            Rational(1),    Rational(3, 2), Rational(2)};

Rational small_rational(std::mt19937_64& rng, long range) {
  const long denom = 1 + static_cast<long>(draw(rng, 3));
  const long num = static_cast<long>(draw(rng, 2 * range * denom + 1)) - range * denom;
  Rational r(num, denom);
  r.canonicalize();
  return r;
}

Rational pick_ratio(std::mt19937_64& rng) { return kRatioPool[draw(rng, kRatioPool.size())]; }

// Up to `max_exceptional` values below the tail start, then coeff * ratio^t.
GeometricSequence random_sequence(std::mt19937_64& rng, const Rational& ratio, bool nonnegative,
                                  std::size_t max_exceptional) {
  std::map<Index, Rational> exceptional;
  const std::size_t count = draw(rng, max_exceptional + 1);
  Index start = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Index t = draw(rng, 8);
    Rational v = small_rational(rng, 3);
    if (nonnegative) v = abs(v);
    exceptional[t] = v;
    start = std::max(start, t + 1);
  }
  Rational coeff = draw(rng, 5) == 0 ? Rational(0) : small_rational(rng, 2);
  if (nonnegative) coeff = abs(coeff);
  return GeometricSequence(std::move(exceptional), start, coeff, ratio);
}

AtomicMeasureSpace random_space(std::mt19937_64& rng) {
  switch (draw(rng, 4)) {
    case 0: return AtomicMeasureSpace(GeometricSequence::constant(1));
    case 1: return AtomicMeasureSpace(random_sequence(rng, Rational(1), true, 3));
    default: {
      const Rational r = kRatioPool[1 + draw(rng, 3)];
      auto w = random_sequence(rng, r, true, 3);
      if (w.tail_is_zero()) w = w + GeometricSequence::geometric(1, r, w.tail_start());
      return AtomicMeasureSpace(w);
    }
  }
}

RepresentableSet random_finite_set(std::mt19937_64& rng) {
  std::set<Index> members;
  const std::size_t size = 1 + draw(rng, 8);
  while (members.size() < size) members.insert(draw(rng, 10));
  return RepresentableSet::finite(std::vector<Index>(members.begin(), members.end()));
}

RepresentableSet random_cofinite_set(std::mt19937_64& rng) {
  std::set<Index> excluded;
  const std::size_t size = draw(rng, 4);
  while (excluded.size() < size) excluded.insert(draw(rng, 10));
  return RepresentableSet::cofinite(std::vector<Index>(excluded.begin(), excluded.end()));
}

std::vector<std::string> fuzz_checks() {
  std::vector<std::string> out;
  for (auto name : known_checks())
    if (name != "expectations") out.emplace_back(name);
  return out;
}

bool constructs(const Scenario& s) {
  try {
    DensityMeasure nu(s.F, s.space);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool fails(const Scenario& s, const std::string& check, const RunOptions& options) {
  Scenario probe = s;
  probe.checks = {check};
  try {
    return !run_scenario(probe, options).front().pass;
  } catch (const Error&) {
    return false;
  }
}

// Copies of `s` with one exceptional value of `seq` dropped.
std::vector<GeometricSequence> without_one_exceptional(const GeometricSequence& seq) {
  std::vector<GeometricSequence> out;
  for (const auto& [t, v] : seq.exceptional()) {
    auto values = seq.exceptional();
    values.erase(t);
    out.emplace_back(std::move(values), seq.tail_start(), seq.tail_coeff(), seq.tail_ratio());
  }
  return out;
}

std::vector<Scenario> shrink_candidates(const Scenario& s) {
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < s.multipliers.size(); ++i) {
    Scenario c = s;
    c.multipliers.erase(c.multipliers.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    Scenario c = s;
    c.sets.erase(c.sets.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < s.multipliers.size(); ++i)
    for (auto& g : without_one_exceptional(s.multipliers[i])) {
      Scenario c = s;
      c.multipliers[i] = std::move(g);
      out.push_back(std::move(c));
    }
  for (auto& w : without_one_exceptional(s.space.weights())) {
    Scenario c = s;
    c.space = AtomicMeasureSpace(std::move(w));
    out.push_back(std::move(c));
  }
  if (const auto* rank = std::get_if<RankDecomposedFunction>(&s.F)) {
    const auto& terms = rank->terms();
    for (std::size_t i = 0; i < terms.size() && terms.size() > 1; ++i) {
      auto fewer = terms;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      Scenario c = s;
      c.F = RankDecomposedFunction(rank->space(), std::move(fewer));
      out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (auto& seq : without_one_exceptional(terms[i].seq)) {
        auto changed = terms;
        changed[i].seq = std::move(seq);
        Scenario c = s;
        c.F = RankDecomposedFunction(rank->space(), std::move(changed));
        out.push_back(std::move(c));
      }
  } else {
    for (auto& seq : without_one_exceptional(std::get<DiagonalFunction>(s.F).seq())) {
      Scenario c = s;
      c.F = DiagonalFunction(std::move(seq));
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

Scenario generate_scenario(std::mt19937_64& rng, const std::string& name) {
  Scenario s;
  s.name = name;
  s.checks = fuzz_checks();
  while (true) {
    s.space = random_space(rng);
    const Rational ratio = pick_ratio(rng);
    if (draw(rng, 5) == 0) {
      s.target.c0 = true;
      s.F = DiagonalFunction(random_sequence(rng, ratio, false, 6));
    } else {
      s.target.c0 = false;
      s.target.finite = FiniteDimSpace{static_cast<std::size_t>(1 + draw(rng, 4)),
                                       static_cast<NormExponent>(draw(rng, 3))};
      std::vector<RankTerm> terms;
      const std::size_t count = 1 + draw(rng, 3);
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<Rational> coords;
        for (std::size_t j = 0; j < s.target.finite.dim; ++j) coords.push_back(small_rational(rng, 2));
        terms.push_back({random_sequence(rng, ratio, false, 6 / count),
                         FiniteDimVector(s.target.finite, std::move(coords))});
      }
      s.F = RankDecomposedFunction(s.target.finite, std::move(terms));
    }
    if (constructs(s)) break;
  }
  s.multipliers.clear();
  const std::size_t multipliers = 2 + draw(rng, 2);
  for (std::size_t k = 0; k < multipliers; ++k)
    s.multipliers.push_back(random_sequence(rng, pick_ratio(rng), false, 3));
  s.sets.clear();
  for (int k = 0; k < 3; ++k) s.sets.push_back(random_finite_set(rng));
  s.sets.push_back(random_cofinite_set(rng));
  return s;
}

Scenario minimize(const Scenario& failing, const std::string& check, const RunOptions& options) {
  Scenario best = failing;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& candidate : shrink_candidates(best)) {
      if (!constructs(candidate) || !fails(candidate, check, options)) continue;
      best = std::move(candidate);
      progress = true;
      break;
    }
  }
  return best;
}

Report fuzz(const FuzzOptions& options, RunStats* stats) {
  Report report;
  report.title = "fuzz";
  report.summary["seed"] = options.seed;
  report.summary["cases"] = options.cases;
  report.summary["mode"] = options.run.approximate ? "approximate" : "exact";
  std::mt19937_64 rng(options.seed);
  std::vector<Scenario> scenarios;
  for (std::size_t i = 0; i < options.cases; ++i)
    scenarios.push_back(generate_scenario(rng, "case-" + std::to_string(i)));
  RunOptions run = options.run;
  run.seed = options.seed;
  auto results = run_all(scenarios, run, stats);
  bool minimized = false;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    for (auto& rec : results[i]) {
      if (rec.pass) {
        rec.rows = Json::array();
      } else if (!minimized) {
        minimized = true;
        rec.witness["minimized"] = write(minimize(scenarios[i], rec.check, run));
        report.summary["first_failure"] = rec.scenario + "/" + rec.check;
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace vmeasure::verify
