#include "core/measure_space.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace vmeasure {

AtomicMeasureSpace::AtomicMeasureSpace(GeometricSequence weights, std::vector<Index> infinite_atoms,
                                       bool allow_infinite_atoms)
    : weights_(std::move(weights)),
      infinite_atoms_(std::move(infinite_atoms)),
      allow_infinite_atoms_(allow_infinite_atoms) {
  std::sort(infinite_atoms_.begin(), infinite_atoms_.end());
  infinite_atoms_.erase(std::unique(infinite_atoms_.begin(), infinite_atoms_.end()),
                        infinite_atoms_.end());
  if (!infinite_atoms_.empty() && !allow_infinite_atoms_)
    throw ValidationError("infinite atoms require allow_infinite_atoms");
  for (const auto& [t, v] : weights_.exceptional())
    if (v < 0) throw ValidationError("negative weight at atom " + std::to_string(t));
  if (weights_.tail_coeff() < 0) throw ValidationError("negative weight tail");
  // Infinite atoms override whatever finite weight was listed for them.
  if (!infinite_atoms_.empty())
    weights_ = weights_.restricted(RepresentableSet::cofinite(infinite_atoms_));
}

bool AtomicMeasureSpace::is_infinite_atom(Index t) const {
  return std::binary_search(infinite_atoms_.begin(), infinite_atoms_.end(), t);
}

ExtendedRational AtomicMeasureSpace::mass(Index t) const {
  if (is_infinite_atom(t)) return ExtendedRational::infinity();
  return weights_(t);
}

ExtendedRational AtomicMeasureSpace::measure(const RepresentableSet& set) const {
  for (Index t : infinite_atoms_)
    if (set.contains(t)) return ExtendedRational::infinity();
  return seq_sum(weights_, set);
}

bool AtomicMeasureSpace::is_mu_null(const RepresentableSet& set) const {
  for (Index t : infinite_atoms_)
    if (set.contains(t)) return false;
  return weights_.restricted(set).is_zero();
}

bool AtomicMeasureSpace::finite_measure_sets_are_tail_finite() const {
  return !weights_.tail_is_zero() && weights_.tail_ratio() >= 1;
}

}  // namespace vmeasure
