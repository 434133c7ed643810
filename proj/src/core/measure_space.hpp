#pragma once

#include <vector>

#include "core/exact.hpp"
#include "core/geometric_sequence.hpp"
#include "core/representable_set.hpp"

namespace vmeasure {

/// Purely atomic measure on the natural numbers: atom t has mass weights(t),
/// except for the listed infinite atoms, which have mass +infinity.
///
/// Infinite atoms are only accepted with `allow_infinite_atoms`; they exist to
/// exercise the rejection paths of every construction that needs a locally
/// determined measure.
class AtomicMeasureSpace {
 public:
  /// Counting measure.
  AtomicMeasureSpace() : AtomicMeasureSpace(GeometricSequence::constant(1)) {}
  explicit AtomicMeasureSpace(GeometricSequence weights, std::vector<Index> infinite_atoms = {},
                              bool allow_infinite_atoms = false);

  static AtomicMeasureSpace counting() { return {}; }

  const GeometricSequence& weights() const noexcept { return weights_; }
  const std::vector<Index>& infinite_atoms() const noexcept { return infinite_atoms_; }
  bool allow_infinite_atoms() const noexcept { return allow_infinite_atoms_; }
  bool is_infinite_atom(Index t) const;

  ExtendedRational mass(Index t) const;
  ExtendedRational measure(const RepresentableSet& set) const;
  bool in_sigma_f(const RepresentableSet& set) const { return measure(set).is_finite(); }
  /// Every atom finite. For atomic measures on P(N) semi-finiteness is the
  /// whole condition: the locality requirement on the sigma-algebra is
  /// automatic.
  bool validate_locally_determined() const { return infinite_atoms_.empty(); }
  bool is_mu_null(const RepresentableSet& set) const;
  /// mu(N) < infinity
  bool is_finite_measure() const { return measure(RepresentableSet::all()).is_finite(); }
  /// True when every set of finite measure meets the weight tail in finitely
  /// many points (the weight tail does not vanish and is not summable).
  bool finite_measure_sets_are_tail_finite() const;

  friend bool operator==(const AtomicMeasureSpace&, const AtomicMeasureSpace&) = default;

 private:
  GeometricSequence weights_;
  std::vector<Index> infinite_atoms_;
  bool allow_infinite_atoms_ = false;
};

}  // namespace vmeasure
