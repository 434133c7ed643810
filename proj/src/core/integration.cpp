#include "core/integration.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace vmeasure {

namespace {

Index atom_cutoff(const AtomicMeasureSpace& space, Index function_tail_start) {
  Index cutoff = std::max(function_tail_start, space.weights().tail_start());
  if (!space.infinite_atoms().empty())
    cutoff = std::max(cutoff, space.infinite_atoms().back() + 1);
  return cutoff;
}

// An infinite atom of `set` at which s does not vanish.
std::optional<Index> infinite_atom_hit(const AtomicMeasureSpace& space, const GeometricSequence& s,
                                       const RepresentableSet& set) {
  for (Index t : space.infinite_atoms())
    if (set.contains(t) && s(t) != 0) return t;
  return std::nullopt;
}

// t -> mu_t s(t) on the finite atoms.
GeometricSequence weighted(const AtomicMeasureSpace& space, const GeometricSequence& s) {
  return space.weights() * s;
}

}  // namespace

CollapsedFunction collapse(const RankDecomposedFunction& f, const AtomicMeasureSpace& space,
                           const RepresentableSet& set) {
  const TailNormalForm& tail = f.tail();
  const Index cutoff = atom_cutoff(space, tail.start);
  CollapsedFunction out{{}, ExtendedRational(0), tail.direction};
  const RepresentableSet head = set.truncated(cutoff);
  for (Index t : head.members()) {
    FiniteDimVector value = f(t);
    ExtendedRational mass = space.mass(t);
    if (value.is_zero() || mass == ExtendedRational(0)) continue;
    out.atoms.push_back({t, std::move(mass), std::move(value)});
  }
  if (!tail.direction.is_zero()) {
    const auto& w = space.weights();
    // For t >= cutoff: mu_t = c rho^t and F(t) = r^t w.
    out.tail_mass = seq_sum(
        GeometricSequence::geometric(w.tail_coeff(), w.tail_ratio() * tail.ratio, cutoff), set);
  }
  return out;
}

ExtendedReal bochner_norm(const VectorFunction& f, const AtomicMeasureSpace& space,
                          const RepresentableSet& set) {
  if (const auto* diag = std::get_if<DiagonalFunction>(&f)) {
    if (infinite_atom_hit(space, diag->seq(), set)) return ExtendedReal::infinity();
    return ExtendedReal(seq_sum(weighted(space, diag->norm_sequence()), set));
  }
  const auto collapsed = collapse(std::get<RankDecomposedFunction>(f), space, set);
  ExtendedReal total(0);
  for (const auto& atom : collapsed.atoms) total += atom.mass * norm(atom.value);
  total += collapsed.tail_mass * norm(collapsed.tail_direction);
  return total;
}

Vector bochner_integral(const VectorFunction& f, const AtomicMeasureSpace& space,
                        const RepresentableSet& set) {
  const ExtendedReal total = bochner_norm(f, space, set);
  if (total.is_infinite())
    throw NotBochnerIntegrableError("integral of |F| over " + set.str() + " is infinite");
  if (const auto* diag = std::get_if<DiagonalFunction>(&f))
    return C0DiagonalVector(weighted(space, diag->seq()).restricted(set));
  const auto& rank = std::get<RankDecomposedFunction>(f);
  const auto collapsed = collapse(rank, space, set);
  FiniteDimVector sum = FiniteDimVector::zero(rank.space());
  for (const auto& atom : collapsed.atoms) sum = sum + atom.value.scaled(atom.mass.value());
  if (!collapsed.tail_direction.is_zero())
    sum = sum + collapsed.tail_direction.scaled(collapsed.tail_mass.value());
  return sum;
}

ExtendedReal dunford_norm(const VectorFunction& f, const AtomicMeasureSpace& space,
                          const RepresentableSet& set) {
  if (const auto* diag = std::get_if<DiagonalFunction>(&f)) {
    if (infinite_atom_hit(space, diag->seq(), set)) return ExtendedReal::infinity();
    return ExtendedReal(seq_sup_abs(weighted(space, diag->seq()), set));
  }
  const auto& rank = std::get<RankDecomposedFunction>(f);
  const auto collapsed = collapse(rank, space, set);
  std::vector<DualBallTerm> terms;
  terms.reserve(collapsed.atoms.size() + 1);
  for (const auto& atom : collapsed.atoms) terms.push_back({atom.mass, atom.value});
  terms.push_back({collapsed.tail_mass, collapsed.tail_direction});
  return dual_ball_abs_max(rank.space(), terms).value;
}

namespace {

// Integral over `set` of the scalar function s against mu, provided s is
// mu-integrable there.
std::optional<Rational> scalar_integral(const AtomicMeasureSpace& space, const GeometricSequence& s,
                                        const RepresentableSet& set) {
  if (infinite_atom_hit(space, s, set)) return std::nullopt;
  const GeometricSequence ws = weighted(space, s);
  if (seq_sum(ws.abs(), set).is_infinite()) return std::nullopt;
  return seq_sum_signed(ws, set);
}

}  // namespace

Vector pettis_integral(const VectorFunction& f, const AtomicMeasureSpace& space,
                       const RepresentableSet& set) {
  if (const auto* diag = std::get_if<DiagonalFunction>(&f)) {
    if (auto t = infinite_atom_hit(space, diag->seq(), set))
      throw NotDunfordError("F is nonzero on the infinite atom " + std::to_string(*t));
    const GeometricSequence candidate = weighted(space, diag->seq()).restricted(set);
    if (seq_sup_abs(candidate, RepresentableSet::all()).is_infinite())
      throw NotDunfordError("sup_t mu_t |s(t)| is infinite over " + set.str());
    if (!candidate.tends_to_zero())
      throw NotPettisError("candidate integral over " + set.str() + " is not in c0",
                           candidate.str());
    return C0DiagonalVector(candidate);
  }
  const auto& rank = std::get<RankDecomposedFunction>(f);
  std::vector<Rational> coords;
  coords.reserve(rank.space().dim);
  for (std::size_t j = 0; j < rank.space().dim; ++j) {
    auto value = scalar_integral(space, rank.coordinate(j), set);
    if (!value)
      throw NotDunfordError("coordinate " + std::to_string(j) + " of F is not integrable over " +
                            set.str());
    coords.push_back(std::move(*value));
  }
  return FiniteDimVector(rank.space(), std::move(coords));
}

IntegrabilityVerdict pettis_decide(const VectorFunction& f, const AtomicMeasureSpace& space) {
  const RepresentableSet all = RepresentableSet::all();
  IntegrabilityVerdict v;
  v.dunford_norm = dunford_norm(f, space);
  v.bochner_norm = bochner_norm(f, space);
  v.bochner = v.bochner_norm.is_finite();
  if (const auto* diag = std::get_if<DiagonalFunction>(&f)) {
    // Each e_t-component is finite unless an infinite atom carries mass.
    const bool components_finite = !infinite_atom_hit(space, diag->seq(), all);
    v.dunford = components_finite && v.dunford_norm.is_finite();
    if (v.dunford) {
      const GeometricSequence candidate = weighted(space, diag->seq());
      v.pettis = candidate.tends_to_zero();
      if (!v.pettis) {
        v.witness = "candidate integral over N is not in c0";
        v.witness_vector = C0DiagonalVector(candidate);
      }
    } else {
      v.witness = "not Dunford integrable";
    }
    return v;
  }
  const auto& rank = std::get<RankDecomposedFunction>(f);
  bool coordinates_integrable = true;
  for (std::size_t j = 0; j < rank.space().dim && coordinates_integrable; ++j)
    coordinates_integrable = scalar_integral(space, rank.coordinate(j), all).has_value();
  v.dunford = coordinates_integrable && v.dunford_norm.is_finite();
  // Finite dimensions: the coordinate integrals assemble the Pettis integral.
  v.pettis = v.dunford;
  if (!v.dunford) v.witness = "not Dunford integrable";
  return v;
}

LocalIntegrability locally_integrable(const VectorFunction& f, const AtomicMeasureSpace& space) {
  if (!space.validate_locally_determined())
    throw NotLocallyDeterminedError("the measure has infinite atoms");
  // Weight tail bounded below by a positive constant: a set of finite
  // measure meets the tail in finitely many atoms, so chi_B F is a finite sum
  // of vectors and integrable in every sense.
  if (space.finite_measure_sets_are_tail_finite()) return {true, true};
  // Otherwise mu(N) < infinity, so N itself is a set of finite measure; F is
  // locally integrable iff it is integrable, and then so is chi_B F for every
  // B (dominated by |F| in norm, and the candidate chi_B y stays in c0).
  const auto verdict = pettis_decide(f, space);
  return {verdict.pettis, verdict.bochner};
}

}  // namespace vmeasure
