#include "verify/checks.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <optional>
#include <random>
#include <stdexcept>

#include "core/errors.hpp"
#include "verify/sampling.hpp"

namespace vmeasure::verify {

RunStats& RunStats::operator+=(const RunStats& o) {
  variation_sets += o.variation_sets;
  dual_samples += o.dual_samples;
  triples += o.triples;
  bochner_triples += o.bochner_triples;
  multiplier_defects += o.multiplier_defects;
  return *this;
}

Scenario with_approximate_norms(const Scenario& s) {
  Scenario out = s;
  if (auto* rank = std::get_if<RankDecomposedFunction>(&out.F)) {
    out.F = rank->with_mode(ArithmeticMode::Approximate);
    out.target.finite.mode = ArithmeticMode::Approximate;
  }
  return out;
}

namespace {

using serial::write;

struct Context {
  Context(const Scenario& s, const RunOptions& o, RunStats& st, Json j)
      : sc(s), opts(o), stats(st), scenario_json(std::move(j)) {}

  const Scenario& sc;
  const RunOptions& opts;
  RunStats& stats;
  Json scenario_json;
  std::optional<DensityMeasure> nu;
  std::string construct_error = "none";
  std::optional<LocalIntegrability> local;
  IntegrabilityVerdict verdict;
  std::vector<RepresentableSet> sets;  // the scenario's sets followed by N

  ExtendedReal semivariation(const RepresentableSet& a) const {
    if (opts.hooks.semivariation) return opts.hooks.semivariation(*nu, a);
    return nu->semivariation(a);
  }
  std::mt19937_64 rng(const std::string& check) const {
    return std::mt19937_64(stable_hash(sc.name + "/" + check, opts.seed));
  }
};

void add_row(const Context& ctx, CheckRecord& rec, Json row, bool ok) {
  row["pass"] = ok;
  if (!ok && rec.pass) rec.witness = Json{{"row", row}, {"scenario", ctx.scenario_json}};
  rec.pass = rec.pass && ok;
  rec.rows.push_back(std::move(row));
}

bool require_measure(const Context& ctx, CheckRecord& rec) {
  if (ctx.nu) return true;
  rec.rows.push_back(Json{{"skipped", "nu_F undefined: " + ctx.construct_error}});
  return false;
}

ExtendedReal vector_norm(const Vector& v) {
  if (const auto* f = std::get_if<FiniteDimVector>(&v)) return norm(*f);
  return ExtendedReal(std::get<C0DiagonalVector>(v).sup_norm());
}

Vector add(const Vector& a, const Vector& b) {
  if (const auto* f = std::get_if<FiniteDimVector>(&a)) return *f + std::get<FiniteDimVector>(b);
  return C0DiagonalVector(std::get<C0DiagonalVector>(a).entries() +
                          std::get<C0DiagonalVector>(b).entries());
}

Vector subtract(const Vector& a, const Vector& b) {
  if (const auto* f = std::get_if<FiniteDimVector>(&a)) return *f - std::get<FiniteDimVector>(b);
  return C0DiagonalVector(std::get<C0DiagonalVector>(a).entries() -
                          std::get<C0DiagonalVector>(b).entries());
}

bool vectors_equal(const Vector& a, const Vector& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&b](const auto& x) { return x == std::get<std::decay_t<decltype(x)>>(b); }, a);
}

Rational pair(const Vector& v, const DualVector& xstar) {
  if (const auto* f = std::get_if<FiniteDimVector>(&v))
    return pairing(*f, std::get<FiniteDimVector>(xstar));
  return std::get<C0DiagonalVector>(v).pairing(std::get<GeometricSequence>(xstar));
}

Json write_dual(const DualVector& x) {
  if (const auto* f = std::get_if<FiniteDimVector>(&x)) return write(*f);
  return write(std::get<GeometricSequence>(x));
}

bool is_rank_one(const Context& ctx) {
  const auto* rank = std::get_if<RankDecomposedFunction>(&ctx.sc.F);
  return rank && rank->is_rank_one();
}

// ---------------------------------------------------------------------------

void check_expectations(Context& ctx, CheckRecord& rec) {
  const Json& e = ctx.sc.expect;
  auto boolean = [&](const std::string& key, std::optional<bool> actual) {
    if (!e.contains(key)) return;
    const bool ok = actual && e[key].is_boolean() && e[key].get<bool>() == *actual;
    add_row(ctx, rec, Json{{"key", key}, {"expected", e[key]},
                           {"actual", actual ? Json(*actual) : Json("undefined")}}, ok);
  };
  auto value = [&](const std::string& key, std::optional<ExtendedReal> actual) {
    if (!e.contains(key)) return;
    bool ok = false;
    try {
      ok = actual && same_value(ExtendedReal(serial::read_extended(e[key], "expect." + key)), *actual);
    } catch (const Error&) {
      ok = false;
    }
    add_row(ctx, rec, Json{{"key", key}, {"expected", e[key]},
                           {"actual", actual ? write(*actual) : Json("undefined")}}, ok);
  };
  if (e.contains("error"))
    add_row(ctx, rec, Json{{"key", "error"}, {"expected", e["error"]}, {"actual", ctx.construct_error}},
            e["error"] == ctx.construct_error);
  auto local = [&](bool LocalIntegrability::*m) -> std::optional<bool> {
    if (!ctx.local) return std::nullopt;
    return (*ctx.local).*m;
  };
  boolean("locally_pettis", local(&LocalIntegrability::locally_pettis));
  boolean("locally_bochner", local(&LocalIntegrability::locally_bochner));
  boolean("bochner", ctx.verdict.bochner);
  boolean("pettis", ctx.verdict.pettis);
  boolean("dunford", ctx.verdict.dunford);
  boolean("bounded", ctx.nu ? std::optional<bool>(ctx.nu->bounded()) : std::nullopt);
  boolean("strongly_additive", ctx.nu ? std::optional<bool>(ctx.nu->strongly_additive()) : std::nullopt);
  value("dunford_norm", ctx.verdict.dunford_norm);
  value("bochner_norm", ctx.verdict.bochner_norm);
  value("semivariation_N",
        ctx.nu ? std::optional<ExtendedReal>(ctx.semivariation(RepresentableSet::all())) : std::nullopt);
  if (!e.contains("multipliers")) return;
  for (std::size_t i = 0; i < ctx.sc.multipliers.size(); ++i) {
    const Json& want = e["multipliers"][i];
    if (!ctx.nu) {
      add_row(ctx, rec, Json{{"multiplier", i}, {"actual", "undefined"}}, false);
      continue;
    }
    const auto v = classify_multiplier(ctx.sc.multipliers[i], *ctx.nu);
    const Json got = write(v);
    bool ok = want.is_object();
    for (const auto& [key, expected] : want.items()) {
      if (!got.contains(key)) {
        ok = false;
      } else if (key == "nu_norm" || key == "variation_norm") {
        try {
          ok = ok && same_value(ExtendedReal(serial::read_extended(expected, key)),
                                key == "nu_norm" ? v.nu_norm : v.variation_norm);
        } catch (const Error&) {
          ok = false;
        }
      } else {
        ok = ok && got[key] == expected;
      }
    }
    add_row(ctx, rec, Json{{"multiplier", i}, {"expected", want}, {"actual", got}}, ok);
  }
}

void check_integrability_chain(Context& ctx, CheckRecord& rec) {
  const auto& v = ctx.verdict;
  bool ok = (!v.bochner || v.pettis) && (!v.pettis || v.dunford) &&
            at_most(v.dunford_norm, v.bochner_norm) && v.dunford == v.dunford_norm.is_finite();
  Json row{{"bochner", v.bochner}, {"pettis", v.pettis}, {"dunford", v.dunford},
           {"dunford_norm", write(v.dunford_norm)}, {"bochner_norm", write(v.bochner_norm)}};
  if (!is_diagonal(ctx.sc.F)) ok = ok && v.bochner == v.pettis && v.pettis == v.dunford;
  if (ctx.local) {
    row["locally_bochner"] = ctx.local->locally_bochner;
    row["locally_pettis"] = ctx.local->locally_pettis;
    ok = ok && (!v.bochner || ctx.local->locally_bochner) &&
         (!ctx.local->locally_bochner || ctx.local->locally_pettis);
  }
  if (!v.pettis && !v.witness.empty()) row["witness"] = v.witness;
  add_row(ctx, rec, std::move(row), ok);
  if (!ctx.nu) return;
  // |nu_F|| (B) equals the Pettis norm of chi_B F.
  for (const auto& b : ctx.sets) {
    if (!ctx.sc.space.in_sigma_f(b)) continue;
    const auto lhs = ctx.semivariation(b);
    const auto rhs = dunford_norm(ctx.sc.F, ctx.sc.space, b);
    add_row(ctx, rec, Json{{"set", write(b)}, {"semivariation", write(lhs)}, {"pettis_norm", write(rhs)}},
            same_value(lhs, rhs));
  }
}

void check_dunford_bounded(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  const bool bounded = ctx.nu->bounded();
  add_row(ctx, rec, Json{{"dunford", ctx.verdict.dunford}, {"bounded", bounded},
                         {"semivariation_N", write(ctx.semivariation(RepresentableSet::all()))}},
          ctx.verdict.dunford == bounded);
}

void check_bochner_equivalence(Context& ctx, CheckRecord& rec) {
  if (!ctx.local) {
    rec.rows.push_back(Json{{"skipped", "local integrability undefined: " + ctx.construct_error}});
    return;
  }
  std::optional<ExtendedReal> variation;
  if (ctx.nu && ctx.local->locally_bochner) variation = ctx.nu->variation(RepresentableSet::all());
  const bool rhs = ctx.local->locally_bochner && variation && variation->is_finite();
  add_row(ctx, rec, Json{{"bochner", ctx.verdict.bochner}, {"locally_bochner", ctx.local->locally_bochner},
                         {"variation_N", variation ? write(*variation) : Json("undefined")}},
          ctx.verdict.bochner == rhs);
}

void check_pettis_equivalence(Context& ctx, CheckRecord& rec) {
  if (!ctx.local) {
    rec.rows.push_back(Json{{"skipped", "local integrability undefined: " + ctx.construct_error}});
    return;
  }
  const bool strongly_additive = ctx.nu && ctx.nu->strongly_additive();
  const bool rhs = ctx.local->locally_pettis && strongly_additive;
  Json row{{"pettis", ctx.verdict.pettis}, {"locally_pettis", ctx.local->locally_pettis}};
  row["strongly_additive"] = ctx.nu ? Json(strongly_additive) : Json("undefined");
  add_row(ctx, rec, std::move(row), ctx.verdict.pettis == rhs);
}

void check_variation_oracle(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  if (!ctx.local->locally_bochner) {
    rec.rows.push_back(Json{{"skipped", "F is not locally Bochner integrable"}});
    return;
  }
  for (const auto& a : ctx.sc.sets) {
    if (!a.is_finite() || a.members().size() > 8) continue;
    const auto closed = ctx.nu->variation(a);
    const auto brute = ctx.nu->variation_bruteforce(a);
    ++ctx.stats.variation_sets;
    add_row(ctx, rec, Json{{"set", write(a)}, {"closed_form", write(closed)},
                           {"bruteforce", write(brute.value)}, {"partition", brute.partition}},
            same_value(closed, brute.value));
  }
}

void check_semivariation_sound(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  const DensityMeasure& nu = *ctx.nu;
  auto rng = ctx.rng(rec.check);
  const bool rank_one = is_rank_one(ctx);
  for (const auto& a : ctx.sets) {
    const auto sv = ctx.semivariation(a);
    Json row{{"set", write(a)}, {"semivariation", write(sv)}};
    bool ok = true;
    if (ctx.local->locally_bochner) {
      const auto var = nu.variation(a);
      row["variation"] = write(var);
      ok = ok && at_most(sv, var);
      if (rank_one) ok = ok && same_value(sv, var);
    }
    ExtendedReal best(0);
    for (std::size_t k = 0; k < ctx.opts.dual_samples; ++k) {
      const auto xstar = sample_dual_for(nu, rng);
      const ExtendedReal lower(ScalarComponentMeasure(nu, xstar).variation(a));
      if (lower > best) best = lower;
      if (!at_most(lower, sv)) {
        ok = false;
        row["violating_dual"] = write_dual(xstar);
        row["violating_value"] = write(lower);
      }
    }
    ctx.stats.dual_samples += ctx.opts.dual_samples;
    row["samples"] = ctx.opts.dual_samples;
    row["best_sample"] = write(best);
    if (sv.is_finite() && !sv.is_zero()) {
      bool attained = false;
      if (nu.is_diagonal()) {
        // On a cofinite A the tail of |mu_t s(t)| is monotone and sv is
        // finite, so the supremum sits below the first tail index of A.
        std::vector<Index> candidates = a.is_finite() ? a.members() : std::vector<Index>{};
        if (!a.is_finite()) {
          Index first_tail = nu.atom_cutoff();
          a.first_member_at_least(nu.atom_cutoff(), first_tail);
          for (Index t = 0; t <= first_tail; ++t)
            if (a.contains(t)) candidates.push_back(t);
        }
        for (Index t : candidates) {
          const Rational m = nu.diagonal_mass()(t);
          if (m == 0) continue;
          const DualVector e = GeometricSequence::delta(t, sgn(m));
          if (same_value(ExtendedReal(ScalarComponentMeasure(nu, e).variation(a)), sv)) {
            attained = true;
            row["witness"] = write_dual(e);
            break;
          }
        }
      } else {
        const auto w = nu.semivariation_witness(a);
        if (w.dual_witness) {
          row["witness"] = write(*w.dual_witness);
          const ExtendedReal at(ScalarComponentMeasure(nu, *w.dual_witness).variation(a));
          if (w.witness_normalized) {
            attained = same_value(at, sv);
          } else {
            // Unnormalized Euclidean witness y: value |y| and pairing sum |y|^2.
            attained = same_value(norm(*w.dual_witness), sv) &&
                       same_value(at, ExtendedReal(euclidean_norm_squared(*w.dual_witness)));
          }
        }
      }
      row["attained"] = attained;
      ok = ok && attained;
    }
    add_row(ctx, rec, std::move(row), ok);
  }
}

void check_rank_one_equality(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  if (!is_rank_one(ctx)) {
    rec.rows.push_back(Json{{"skipped", "F is not rank one"}});
    return;
  }
  for (const auto& a : ctx.sets) {
    const auto sv = ctx.semivariation(a);
    const auto var = ctx.nu->variation(a);
    add_row(ctx, rec, Json{{"set", write(a)}, {"semivariation", write(sv)}, {"variation", write(var)}},
            same_value(sv, var));
  }
}

void check_measure_axioms(Context& ctx, CheckRecord& rec) {
  const auto& mu = ctx.sc.space;
  for (const auto& a : ctx.sets) {
    Json row{{"set", write(a)}, {"measure", write(mu.measure(a))}};
    bool ok = true;
    // Monotone exhaustion of mu along A ∩ [0, n).
    ExtendedRational previous(0);
    for (Index n : {0, 4, 16, 64, 96}) {
      const auto partial = mu.measure(a.truncated(n));
      ok = ok && previous <= partial && partial <= mu.measure(a);
      previous = partial;
    }
    const auto total = mu.measure(a);
    if (total.is_finite()) {
      const Rational gap = total.value() - previous.value();
      ok = ok && gap == seq_sum(mu.weights(), a - RepresentableSet::range(0, 96)).value() &&
           gap < Rational(1, 1000000);
    } else {
      ok = ok && previous > mu.measure(a.truncated(64));
    }
    if (ctx.nu) {
      const bool mu_null = mu.is_mu_null(a);
      bool nu_null = false;
      try {
        nu_null = ctx.nu->is_nu_null(a);
        row["nu_null"] = nu_null;
      } catch (const std::logic_error& e) {
        row["nu_null"] = e.what();
        ok = false;
      }
      row["mu_null"] = mu_null;
      ok = ok && (!mu_null || nu_null);
      if (mu.in_sigma_f(a)) {
        // Countable additivity along A ∩ [0, n) with the gap bounded by the
        // semivariation of the remainder.
        const auto whole = ctx.nu->evaluate(a);
        const auto rest = a - RepresentableSet::range(0, 96);
        const auto gap = vector_norm(subtract(whole, ctx.nu->evaluate(a.truncated(96))));
        const auto bound = ctx.semivariation(rest);
        row["exhaustion_gap"] = write(gap);
        ok = ok && at_most(gap, bound) && at_most(bound, ExtendedReal(Rational(1, 1000000)));
      }
    }
    add_row(ctx, rec, std::move(row), ok);
  }
  for (std::size_t i = 0; i < ctx.sets.size(); ++i) {
    for (std::size_t j = 0; j < ctx.sets.size(); ++j) {
      if (i == j) continue;
      const auto& a = ctx.sets[i];
      const auto& b = ctx.sets[j];
      bool ok = mu.measure(a | b) == mu.measure(a - b) + mu.measure(b);
      Json row{{"pair", Json::array({write(a), write(b)})}};
      if (mu.in_sigma_f(a) && mu.in_sigma_f(b))
        ok = ok && mu.in_sigma_f(a | b) && mu.in_sigma_f(a & b) && mu.in_sigma_f(a - b);
      if (ctx.nu) {
        if (mu.in_sigma_f(a) && mu.in_sigma_f(b))
          ok = ok && vectors_equal(ctx.nu->evaluate(a | b), add(ctx.nu->evaluate(a - b), ctx.nu->evaluate(b)));
        ok = ok && at_most(ctx.semivariation(a & b), ctx.semivariation(a));
        if (ctx.local->locally_bochner)
          ok = ok && at_most(ctx.nu->variation(a & b), ctx.nu->variation(a | b));
      }
      add_row(ctx, rec, std::move(row), ok);
    }
  }
  if (ctx.nu) {
    // N0(mu) ⊆ N0(nu_F), strict when some atom of positive mass carries F = 0.
    const auto nu_null = ctx.nu->null_atoms();
    Json strict = nullptr;
    for (Index t = 0; t < ctx.nu->atom_cutoff() + 2; ++t)
      if (nu_null.contains(t) && !mu.is_mu_null(RepresentableSet::finite({t}))) {
        strict = t;
        break;
      }
    bool ok = true;
    for (Index t = 0; t < ctx.nu->atom_cutoff() + 2; ++t)
      if (mu.is_mu_null(RepresentableSet::finite({t}))) ok = ok && nu_null.contains(t);
    add_row(ctx, rec, Json{{"nu_null_atoms", write(nu_null)}, {"strictness_witness", strict}}, ok);
  }
}

void check_weak_l1_isometry(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  const DensityMeasure& nu = *ctx.nu;
  auto rng = ctx.rng(rec.check);
  for (std::size_t i = 0; i < ctx.sc.multipliers.size(); ++i) {
    const auto g = normalize_multiplier(ctx.sc.multipliers[i], nu);
    const auto iso = mf_isometry_check(g, nu);
    const VectorFunction gf = multiply(g, nu.density());
    const auto verdict = pettis_decide(gf, nu.space());
    const bool l1 = in_L1(g, nu);
    ++ctx.stats.triples;
    Json row{{"multiplier", i}, {"nu_norm", write(iso.lhs)}, {"dunford_norm_gF", write(iso.rhs)},
             {"in_L1w", iso.lhs.is_finite()}, {"dunford_gF", verdict.dunford},
             {"in_L1", l1}, {"pettis_gF", verdict.pettis}};
    bool ok = iso.equal && iso.membership_agrees && l1 == verdict.pettis;
    if (l1) {
      std::size_t checked = 0;
      for (const auto& a : ctx.sets) {
        const auto x = integrate(g, nu, a);
        for (std::size_t k = 0; k < ctx.opts.integral_samples; ++k) {
          const auto xstar = sample_dual_for(nu, rng);
          const Rational lhs = pair(x, xstar);
          const Rational rhs = ScalarComponentMeasure(nu, xstar).integral(g, a);
          ++checked;
          if (lhs != rhs) {
            ok = false;
            row["violating_set"] = write(a);
            row["violating_dual"] = write_dual(xstar);
          }
        }
      }
      row["integral_N"] = write(integrate(g, nu, RepresentableSet::all()));
      row["duality_checks"] = checked;
    }
    add_row(ctx, rec, std::move(row), ok);
  }
}

void check_variation_l1_isometry(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  if (!ctx.local->locally_bochner) {
    rec.rows.push_back(Json{{"skipped", "F is not locally Bochner integrable"}});
    return;
  }
  for (std::size_t i = 0; i < ctx.sc.multipliers.size(); ++i) {
    const auto g = normalize_multiplier(ctx.sc.multipliers[i], *ctx.nu);
    const auto check = l1_variation_check(g, *ctx.nu);
    ++ctx.stats.bochner_triples;
    add_row(ctx, rec, Json{{"multiplier", i}, {"variation_norm", write(check.lhs)},
                           {"bochner_norm_gF", write(check.rhs)}, {"in_L1_variation", check.lhs.is_finite()}},
            check.equal && check.membership_agrees);
  }
}

void check_null_invariance(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  const DensityMeasure& nu = *ctx.nu;
  const auto null_atoms = nu.null_atoms();
  Index t = 0;
  const bool has_null = null_atoms.first_member_at_least(0, t);
  for (std::size_t i = 0; i < ctx.sc.multipliers.size(); ++i) {
    const auto& g = ctx.sc.multipliers[i];
    Json row{{"multiplier", i}};
    bool ok = true;
    if (has_null) {
      const auto h = g + GeometricSequence::delta(t, 7);
      const bool same = weakly_equal_ae(multiply(g, nu.density()), multiply(h, nu.density()), nu.space());
      const auto ng = nu_norm(g, nu), nh = nu_norm(h, nu);
      row["perturbed_at"] = t;
      row["weakly_equal"] = same;
      ok = same && same_value(ng, nh) && normalize_multiplier(g, nu) == normalize_multiplier(h, nu);
    }
    // g_n = g chi_[0,n) agrees with g on [0, n), so <g_n F(t), x*> = <g F(t), x*> there.
    const Index n = 6;
    const auto gn = g.restricted(RepresentableSet::range(0, n));
    const auto gf = multiply(g, nu.density());
    const auto gnf = multiply(gn, nu.density());
    for (Index s = 0; s < n; ++s) ok = ok && vectors_equal(evaluate(gf, s), evaluate(gnf, s));
    add_row(ctx, rec, std::move(row), ok);
  }
}

void check_three_space_equality(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  if (!is_rank_one(ctx)) {
    rec.rows.push_back(Json{{"skipped", "F is not rank one"}});
    return;
  }
  const auto& rank = std::get<RankDecomposedFunction>(ctx.sc.F);
  // F = f x: pick x as the first nonzero term vector.
  std::optional<FiniteDimVector> x;
  GeometricSequence f;
  for (const auto& term : rank.terms()) {
    if (term.vec.is_zero() || term.seq.is_zero()) continue;
    if (!x) x = term.vec;
    std::size_t j = 0;
    while ((*x)[j] == 0) ++j;
    f = f + term.seq.scaled(Rational(term.vec[j] / (*x)[j]));
  }
  for (std::size_t i = 0; i < ctx.sc.multipliers.size(); ++i) {
    const auto g = normalize_multiplier(ctx.sc.multipliers[i], *ctx.nu);
    const auto v = classify_multiplier(g, *ctx.nu);
    Json row{{"multiplier", i}, {"verdict", write(v)}};
    bool ok = v.in_L1w == v.in_L1 && v.in_L1 == v.in_L1_of_variation && same_value(v.nu_norm, v.variation_norm);
    if (v.in_L1 && x) {
      const Rational gf = seq_sum_signed(g * f * ctx.sc.space.weights(), RepresentableSet::all());
      const Vector expected = x->scaled(gf);
      row["closed_form"] = write(expected);
      ok = ok && vectors_equal(*v.integral, expected);
    }
    add_row(ctx, rec, std::move(row), ok);
  }
}

void check_simple_density(Context& ctx, CheckRecord& rec) {
  if (!require_measure(ctx, rec)) return;
  const DensityMeasure& nu = *ctx.nu;
  for (std::size_t i = 0; i < ctx.sc.multipliers.size(); ++i) {
    const auto g = normalize_multiplier(ctx.sc.multipliers[i], nu);
    if (!in_L1(g, nu)) {
      rec.rows.push_back(Json{{"multiplier", i}, {"skipped", "not nu-integrable"}});
      continue;
    }
    ++ctx.stats.multiplier_defects;
    const auto weight = g.abs();
    const Index cutoff = std::max(nu.atom_cutoff(), weight.tail_start());
    Json defects = Json::array();
    bool ok = true;
    ExtendedReal previous = ExtendedReal::infinity();
    for (Index n = 0; n <= cutoff + 4; ++n) {
      const auto d = simple_function_approximation(g, nu, n).defect;
      defects.push_back(write(d));
      ok = ok && at_most(d, previous);
      previous = d;
      if (n < cutoff) continue;
      // Beyond every cutoff all remaining atoms are multiples of one vector
      // with geometric weights q^t, so the defect has a closed form.
      ExtendedReal closed;
      Rational q;
      if (nu.is_diagonal()) {
        const auto h = (g * nu.diagonal_mass()).abs();
        q = h.tail_ratio();
        closed = ExtendedReal(seq_sup_abs(h, RepresentableSet::from(n)));
      } else {
        q = weight.tail_ratio() * nu.tail_ratio();
        const auto coeff = seq_sum(GeometricSequence::geometric(weight.tail_coeff(), q, n),
                                   RepresentableSet::all());
        closed = coeff * norm(*nu.tail_mass());
      }
      ok = ok && same_value(closed, d) && (closed.is_zero() || q < 1);
    }
    add_row(ctx, rec, Json{{"multiplier", i}, {"defects", defects}}, ok);
  }
}

using CheckFn = void (*)(Context&, CheckRecord&);

CheckFn lookup(std::string_view name) {
  if (name == "expectations") return check_expectations;
  if (name == "integrability_chain") return check_integrability_chain;
  if (name == "dunford_bounded") return check_dunford_bounded;
  if (name == "bochner_equivalence") return check_bochner_equivalence;
  if (name == "pettis_equivalence") return check_pettis_equivalence;
  if (name == "variation_oracle") return check_variation_oracle;
  if (name == "semivariation_sound") return check_semivariation_sound;
  if (name == "rank_one_equality") return check_rank_one_equality;
  if (name == "measure_axioms") return check_measure_axioms;
  if (name == "weak_l1_isometry") return check_weak_l1_isometry;
  if (name == "variation_l1_isometry") return check_variation_l1_isometry;
  if (name == "null_invariance") return check_null_invariance;
  if (name == "three_space_equality") return check_three_space_equality;
  if (name == "simple_density") return check_simple_density;
  throw ValidationError("unknown check '" + std::string(name) + "'");
}

}  // namespace

std::vector<CheckRecord> run_scenario(const Scenario& input, const RunOptions& options, RunStats* stats) {
  const Scenario s = options.approximate ? with_approximate_norms(input) : input;
  RunStats local_stats;
  Context ctx(s, options, stats ? *stats : local_stats, write(input));
  ctx.verdict = pettis_decide(s.F, s.space);
  try {
    ctx.local = locally_integrable(s.F, s.space);
    ctx.nu.emplace(s.F, s.space);
  } catch (const Error& e) {
    ctx.construct_error = error_code_name(e.code());
  }
  ctx.sets = s.sets;
  ctx.sets.push_back(RepresentableSet::all());

  std::vector<CheckRecord> out;
  for (const auto& name : s.checks) {
    CheckRecord rec;
    rec.scenario = s.name;
    rec.check = name;
    try {
      lookup(name)(ctx, rec);
    } catch (const std::exception& e) {
      add_row(ctx, rec, Json{{"error", e.what()}}, false);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::vector<CheckRecord>> run_all(const std::vector<Scenario>& scenarios, const RunOptions& options,
                                              RunStats* stats) {
  std::vector<std::vector<CheckRecord>> out(scenarios.size());
  std::vector<RunStats> per_scenario(scenarios.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, scenarios.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++)
      out[i] = run_scenario(scenarios[i], options, &per_scenario[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  if (stats)
    for (const auto& s : per_scenario) *stats += s;
  return out;
}

Report run_scenarios(const std::vector<Scenario>& scenarios, const RunOptions& options,
                     const std::string& title) {
  Report report;
  report.title = title;
  report.summary["scenarios"] = scenarios.size();
  report.summary["mode"] = options.approximate ? "approximate" : "exact";
  for (auto& records : run_all(scenarios, options))
    for (auto& r : records) report.records.push_back(std::move(r));
  return report;
}

}  // namespace vmeasure::verify
