#include "core/l1_spaces.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"

namespace vmeasure {

namespace {

Rational pair(const Vector& v, const DualVector& xstar) {
  if (const auto* f = std::get_if<FiniteDimVector>(&v))
    return pairing(*f, std::get<FiniteDimVector>(xstar));
  return std::get<C0DiagonalVector>(v).pairing(std::get<GeometricSequence>(xstar));
}

// Coordinate functionals and their sum (R^n), or the first unit vectors
// together with a summable geometric functional (c0).
std::vector<DualVector> probe_functionals(const DensityMeasure& nu) {
  std::vector<DualVector> out;
  if (nu.is_diagonal()) {
    const Index last = nu.atom_cutoff() + 2;
    for (Index t = 0; t < last; ++t) out.emplace_back(GeometricSequence::delta(t, 1));
    out.emplace_back(GeometricSequence::geometric(1, Rational(1, 2)));
    return out;
  }
  const auto& space = std::get<RankDecomposedFunction>(nu.density()).space().dual();
  std::vector<Rational> ones(space.dim, Rational(1));
  for (std::size_t j = 0; j < space.dim; ++j) out.emplace_back(FiniteDimVector::basis(space, j));
  out.emplace_back(FiniteDimVector(space, std::move(ones)));
  return out;
}

}  // namespace

GeometricSequence normalize_multiplier(const GeometricSequence& g, const DensityMeasure& nu) {
  return g.restricted(nu.null_atoms().complement());
}

ExtendedReal nu_norm(const GeometricSequence& g, const DensityMeasure& nu) {
  return nu.weighted_semivariation(g, RepresentableSet::all());
}

bool in_L1w(const GeometricSequence& g, const DensityMeasure& nu) {
  return nu_norm(g, nu).is_finite();
}

bool in_L1(const GeometricSequence& g, const DensityMeasure& nu) {
  if (!in_L1w(g, nu)) return false;
  // R^n: every Dunford-type set integral is a vector. c0: the set integrals
  // t -> g(t) nu({t})_t restricted to A stay in c0 iff they do for A = N.
  if (nu.is_diagonal()) return (g * nu.diagonal_mass()).tends_to_zero();
  return true;
}

IsometryCheck mf_isometry_check(const GeometricSequence& g, const DensityMeasure& nu) {
  IsometryCheck out;
  out.lhs = nu_norm(g, nu);
  const VectorFunction gf = multiply(g, nu.density());
  out.rhs = dunford_norm(gf, nu.space());
  out.equal = same_value(out.lhs, out.rhs);
  out.membership_agrees = out.lhs.is_finite() == pettis_decide(gf, nu.space()).dunford;
  return out;
}

Vector integrate(const GeometricSequence& g, const DensityMeasure& nu, const RepresentableSet& set) {
  if (!in_L1(g, nu))
    throw NotNuIntegrableError("g is not nu-integrable: " + g.str(), g.str());
  Vector x = pettis_integral(multiply(g, nu.density()), nu.space(), set);
  const auto probes = probe_functionals(nu);
  for (const auto& xstar : probes) {
    if (pair(x, xstar) != ScalarComponentMeasure(nu, xstar).integral(g, set))
      throw std::logic_error("integral of g over " + set.str() +
                             " disagrees with a scalar component");
  }
  return x;
}

bool integral_matches_components(const GeometricSequence& g, const DensityMeasure& nu,
                                 const RepresentableSet& set, std::span<const DualVector> xstars) {
  const Vector x = integrate(g, nu, set);
  return std::all_of(xstars.begin(), xstars.end(), [&](const DualVector& xstar) {
    return pair(x, xstar) == ScalarComponentMeasure(nu, xstar).integral(g, set);
  });
}

ExtendedReal variation_norm(const GeometricSequence& g, const DensityMeasure& nu) {
  if (!nu.local().locally_bochner)
    throw NotLocallyBochnerError("F is not locally Bochner integrable");
  const GeometricSequence weight = g.abs();
  if (nu.is_diagonal())
    return ExtendedReal(seq_sum((weight * nu.diagonal_mass()).abs(), RepresentableSet::all()));
  const Index cutoff = std::max(nu.atom_cutoff(), weight.tail_start());
  ExtendedReal total(0);
  for (Index t = 0; t < cutoff; ++t) {
    const Rational c = weight(t);
    if (c != 0) total += ExtendedRational(c) * norm(std::get<FiniteDimVector>(nu.atom(t)));
  }
  const FiniteDimVector& u = *nu.tail_mass();
  if (!u.is_zero()) {
    const ExtendedRational tail = seq_sum(
        GeometricSequence::geometric(weight.tail_coeff(), weight.tail_ratio() * nu.tail_ratio(),
                                     cutoff),
        RepresentableSet::all());
    total += tail * norm(u);
  }
  return total;
}

IsometryCheck l1_variation_check(const GeometricSequence& g, const DensityMeasure& nu) {
  IsometryCheck out;
  out.lhs = variation_norm(g, nu);
  const VectorFunction gf = multiply(g, nu.density());
  out.rhs = bochner_norm(gf, nu.space());
  out.equal = same_value(out.lhs, out.rhs);
  out.membership_agrees = out.lhs.is_finite() == pettis_decide(gf, nu.space()).bochner;
  return out;
}

SimpleApproximation simple_function_approximation(const GeometricSequence& g,
                                                  const DensityMeasure& nu, Index n) {
  if (!in_L1(g, nu)) throw NotNuIntegrableError("g is not nu-integrable: " + g.str(), g.str());
  return {g.restricted(RepresentableSet::range(0, n)),
          nu_norm(g.restricted(RepresentableSet::from(n)), nu)};
}

MultiplierVerdict classify_multiplier(const GeometricSequence& g, const DensityMeasure& nu) {
  const GeometricSequence h = normalize_multiplier(g, nu);
  MultiplierVerdict v;
  v.nu_norm = nu_norm(h, nu);
  v.in_L1w = v.nu_norm.is_finite();
  v.in_L1 = in_L1(h, nu);
  if (nu.local().locally_bochner) {
    v.variation_norm = variation_norm(h, nu);
    v.in_L1_of_variation = v.variation_norm.is_finite();
  } else {
    v.variation_norm = ExtendedReal::infinity();
  }
  if (v.in_L1) v.integral = integrate(h, nu, RepresentableSet::all());
  return v;
}

}  // namespace vmeasure
