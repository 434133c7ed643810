#include "core/density_measure.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"

namespace vmeasure {

namespace {

ExtendedReal vector_norm(const Vector& v) {
  if (const auto* f = std::get_if<FiniteDimVector>(&v)) return norm(*f);
  return ExtendedReal(std::get<C0DiagonalVector>(v).sup_norm());
}

}  // namespace

DensityMeasure::DensityMeasure(VectorFunction f, AtomicMeasureSpace space)
    : f_(std::move(f)), space_(std::move(space)) {
  if (!space_.validate_locally_determined())
    throw NotLocallyDeterminedError("nu_F needs a locally determined measure (no infinite atoms)");
  local_ = locally_integrable(f_, space_);
  if (!local_.locally_pettis)
    throw NotLocallyPettisError("F is not locally Pettis integrable");
  const auto& w = space_.weights();
  if (const auto* diag = std::get_if<DiagonalFunction>(&f_)) {
    diagonal_mass_ = w * diag->seq();
    cutoff_ = diagonal_mass_.tail_start();
    tail_ratio_ = diagonal_mass_.tail_ratio();
    return;
  }
  const auto& rank = std::get<RankDecomposedFunction>(f_);
  const TailNormalForm& tail = rank.tail();
  cutoff_ = std::max(tail.start, w.tail_start());
  tail_ratio_ = w.tail_ratio() * tail.ratio;
  tail_mass_ = tail.direction.scaled(w.tail_coeff());
  if (tail_ratio_ == 0) {
    // Only t = 0 can carry a tail with ratio 0; list it as an atom instead.
    cutoff_ = std::max<Index>(cutoff_, 1);
    tail_mass_ = FiniteDimVector::zero(rank.space());
  }
}

Vector DensityMeasure::evaluate(const RepresentableSet& set) const {
  if (!space_.in_sigma_f(set))
    throw NotInSigmaFError("nu_F is defined on sets of finite measure; mu(" + set.str() +
                           ") = inf");
  return pettis_integral(f_, space_, set);
}

Vector DensityMeasure::atom(Index t) const {
  if (is_diagonal()) return C0DiagonalVector(GeometricSequence::delta(t, diagonal_mass_(t)));
  const auto& rank = std::get<RankDecomposedFunction>(f_);
  return rank(t).scaled(space_.weights()(t));
}

ExtendedReal DensityMeasure::variation(const RepresentableSet& set) const {
  if (!local_.locally_bochner) throw NotLocallyBochnerError("F is not locally Bochner integrable");
  return bochner_norm(f_, space_, set);
}

PartitionSupremum DensityMeasure::variation_bruteforce(const RepresentableSet& set) const {
  if (!set.is_finite()) throw TooLargeError("partition enumeration needs a finite set");
  const auto& members = set.members();
  const std::size_t n = members.size();
  if (n > kMaxBruteforceAtoms)
    throw TooLargeError(std::to_string(n) + " atoms exceed the partition-enumeration cap " +
                        std::to_string(kMaxBruteforceAtoms));
  PartitionSupremum out{ExtendedReal(0), {}};
  if (n == 0) return out;

  // |nu(S)| for every subset S, indexed by bitmask.
  std::vector<ExtendedReal> block_norm(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < block_norm.size(); ++mask) {
    std::vector<Index> block;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) block.push_back(members[i]);
    block_norm[mask] = vector_norm(evaluate(RepresentableSet::finite(std::move(block))));
  }

  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
  std::vector<std::size_t> rgs(n, 0), prefix_max(n, 0);
  std::vector<std::size_t> best_rgs;
  bool have_best = false;
  while (true) {
    std::vector<std::size_t> blocks(prefix_max[n - 1] + 1, 0);
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]] |= std::size_t{1} << i;
    ExtendedReal total(0);
    for (std::size_t b : blocks) total += block_norm[b];
    if (!have_best || total > out.value) {
      out.value = total;
      best_rgs = rgs;
      have_best = true;
    }
    // Next string in lexicographic order.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rgs[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  const std::size_t block_count = *std::max_element(best_rgs.begin(), best_rgs.end()) + 1;
  out.partition.assign(block_count, {});
  for (std::size_t i = 0; i < n; ++i) out.partition[best_rgs[i]].push_back(members[i]);
  return out;
}

DualBallMax DensityMeasure::weighted_semivariation_witness(const GeometricSequence& g,
                                                           const RepresentableSet& set) const {
  if (is_diagonal()) throw InvalidArgumentError("sign-pattern witness needs a finite-dimensional target");
  const auto& space = std::get<RankDecomposedFunction>(f_).space();
  const GeometricSequence weight = g.abs();
  const Index cutoff = std::max(cutoff_, weight.tail_start());
  std::vector<DualBallTerm> terms;
  const RepresentableSet head = set.truncated(cutoff);
  for (Index t : head.members()) {
    const Rational c = weight(t);
    if (c == 0) continue;
    terms.push_back({c, std::get<FiniteDimVector>(atom(t))});
  }
  if (!tail_mass_->is_zero()) {
    // |g(t)| nu({t}) = |c_g| (rho_g kappa)^t u beyond the cutoff.
    const ExtendedRational tail_coeff = seq_sum(
        GeometricSequence::geometric(weight.tail_coeff(), weight.tail_ratio() * tail_ratio_, cutoff),
        set);
    terms.push_back({tail_coeff, *tail_mass_});
  }
  return dual_ball_abs_max(space, terms);
}

ExtendedReal DensityMeasure::weighted_semivariation(const GeometricSequence& g,
                                                    const RepresentableSet& set) const {
  if (is_diagonal()) return ExtendedReal(seq_sup_abs(g * diagonal_mass_, set));
  return weighted_semivariation_witness(g, set).value;
}

ExtendedReal DensityMeasure::semivariation(const RepresentableSet& set) const {
  return weighted_semivariation(GeometricSequence::constant(1), set);
}

DualBallMax DensityMeasure::semivariation_witness(const RepresentableSet& set) const {
  return weighted_semivariation_witness(GeometricSequence::constant(1), set);
}

RepresentableSet DensityMeasure::null_atoms() const {
  std::vector<Index> zeros;
  auto atom_is_zero = [this](Index t) {
    const Vector a = atom(t);
    if (const auto* v = std::get_if<FiniteDimVector>(&a)) return v->is_zero();
    return std::get<C0DiagonalVector>(a).entries().is_zero();
  };
  for (Index t = 0; t < cutoff_; ++t)
    if (atom_is_zero(t)) zeros.push_back(t);
  RepresentableSet out = RepresentableSet::finite(std::move(zeros));
  const bool tail_zero = is_diagonal() ? diagonal_mass_.tail_is_zero() : tail_mass_->is_zero();
  if (tail_zero) out = out | RepresentableSet::from(cutoff_);
  return out;
}

bool DensityMeasure::is_nu_null(const RepresentableSet& set) const {
  const bool direct = (set - null_atoms()).is_empty();
  const bool via_semivariation = semivariation(set).is_zero();
  if (direct != via_semivariation)
    throw std::logic_error("nu-null test disagrees with semivariation on " + set.str());
  return direct;
}

bool DensityMeasure::strongly_additive() const {
  if (is_diagonal()) return diagonal_mass_.tends_to_zero();
  return bounded();
}

ScalarComponentMeasure::ScalarComponentMeasure(const DensityMeasure& parent, DualVector xstar)
    : parent_(&parent), xstar_(std::move(xstar)) {
  if (parent.is_diagonal()) {
    const auto* seq = std::get_if<GeometricSequence>(&xstar_);
    if (!seq) throw MixedSpaceError("a c0-valued measure pairs with an l1 sequence");
    if (seq_sum(seq->abs(), RepresentableSet::all()).is_infinite())
      throw InvalidArgumentError("functional is not in l1: " + seq->str());
    lambda_ = parent.diagonal_mass() * *seq;
    return;
  }
  const auto* x = std::get_if<FiniteDimVector>(&xstar_);
  if (!x) throw MixedSpaceError("an R^n-valued measure pairs with a vector functional");
  std::map<Index, Rational> head;
  for (Index t = 0; t < parent.atom_cutoff(); ++t)
    head.emplace(t, pairing(std::get<FiniteDimVector>(parent.atom(t)), *x));
  lambda_ = GeometricSequence(std::move(head), parent.atom_cutoff(),
                              pairing(*parent.tail_mass(), *x), parent.tail_ratio());
}

Rational ScalarComponentMeasure::evaluate(const RepresentableSet& set) const {
  if (!parent_->space().in_sigma_f(set))
    throw NotInSigmaFError("<nu, x*> is defined on sets of finite measure");
  return seq_sum_signed(lambda_, set);
}

ExtendedRational ScalarComponentMeasure::variation(const RepresentableSet& set) const {
  return seq_sum(lambda_.abs(), set);
}

Rational ScalarComponentMeasure::integral(const GeometricSequence& g,
                                          const RepresentableSet& set) const {
  return seq_sum_signed(g * lambda_, set);
}

ExtendedRational ScalarComponentMeasure::abs_integral(const GeometricSequence& g,
                                                      const RepresentableSet& set) const {
  return seq_sum((g * lambda_).abs(), set);
}

}  // namespace vmeasure
