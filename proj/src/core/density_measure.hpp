#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "core/banach_space.hpp"
#include "core/integration.hpp"
#include "core/measure_space.hpp"
#include "core/vector_functions.hpp"

namespace vmeasure {

/// A dual functional: a vector of R^n paired coordinatewise, or an l^1
/// sequence acting on c0.
using DualVector = std::variant<FiniteDimVector, GeometricSequence>;

/// Partition of a finite set together with the value it attains.
struct PartitionSupremum {
  ExtendedReal value;
  std::vector<std::vector<Index>> partition;
};

inline constexpr std::size_t kMaxBruteforceAtoms = 12;

/// The vector measure nu_F(B) = Pettis integral of F over B, defined on the
/// sets of finite mu-measure.
///
/// Construction requires a locally determined space and a locally Pettis
/// integrable F. All cached data (the atom masses nu({t}) beyond the cutoff,
/// in closed form) is computed once in the constructor.
///
/// The measure-side quantities here (semivariation, atoms, scalar
/// components) are computed from nu's own atoms nu({t}) and its tail; they do
/// not go through the function-side code in integration.hpp, which is what
/// lets the isometry checks compare two independent routes.
class DensityMeasure {
 public:
  /// Throws NotLocallyDeterminedError or NotLocallyPettisError.
  DensityMeasure(VectorFunction f, AtomicMeasureSpace space);

  const VectorFunction& density() const noexcept { return f_; }
  const AtomicMeasureSpace& space() const noexcept { return space_; }
  bool is_diagonal() const { return vmeasure::is_diagonal(f_); }
  const LocalIntegrability& local() const noexcept { return local_; }

  /// nu(B). Throws NotInSigmaFError when mu(B) is infinite.
  Vector evaluate(const RepresentableSet& set) const;
  /// nu({t}) = mu_t F(t)
  Vector atom(Index t) const;
  /// Atoms below this index are listed explicitly; from here on
  /// nu({t}) = ratio^t * tail_mass (rank case) or tail of the diagonal mass.
  Index atom_cutoff() const noexcept { return cutoff_; }
  const Rational& tail_ratio() const noexcept { return tail_ratio_; }
  /// Rank case: u with nu({t}) = tail_ratio^t u for t >= atom_cutoff().
  const std::optional<FiniteDimVector>& tail_mass() const noexcept { return tail_mass_; }
  /// Diagonal case: t -> mu_t s(t), so nu({t}) = m(t) e_t.
  const GeometricSequence& diagonal_mass() const noexcept { return diagonal_mass_; }

  /// |nu|(A) = integral over A of |F| dmu. Throws NotLocallyBochnerError.
  ExtendedReal variation(const RepresentableSet& set) const;
  /// sup over partitions of a finite A of sum_j |nu(A_j)|, by enumeration of
  /// restricted growth strings. Throws TooLargeError beyond
  /// kMaxBruteforceAtoms atoms.
  PartitionSupremum variation_bruteforce(const RepresentableSet& set) const;

  /// ||nu||(A) = sup over the dual ball of |<nu, x*>|(A).
  ExtendedReal semivariation(const RepresentableSet& set) const;
  /// Sign-pattern data behind semivariation() (rank case only).
  DualBallMax semivariation_witness(const RepresentableSet& set) const;

  /// sup over the dual ball of integral |g| d|<nu, x*>|, from the atoms of nu.
  ExtendedReal weighted_semivariation(const GeometricSequence& g,
                                      const RepresentableSet& set) const;
  DualBallMax weighted_semivariation_witness(const GeometricSequence& g,
                                             const RepresentableSet& set) const;

  /// mu_t F(t) = 0 on A. Computed both directly and as semivariation(A) = 0;
  /// a disagreement throws std::logic_error.
  bool is_nu_null(const RepresentableSet& set) const;
  /// Indices below atom_cutoff() whose atom vanishes, plus the whole tail
  /// when the tail mass vanishes.
  RepresentableSet null_atoms() const;

  bool bounded() const { return semivariation(RepresentableSet::all()).is_finite(); }
  /// nu(B_n) -> 0 for disjoint B_n. In R^n (no copy of c0) this is
  /// boundedness; for the diagonal family it is mu_t s(t) -> 0.
  bool strongly_additive() const;

 private:
  VectorFunction f_;
  AtomicMeasureSpace space_;
  LocalIntegrability local_;
  Index cutoff_ = 0;
  Rational tail_ratio_ = 0;
  std::optional<FiniteDimVector> tail_mass_;
  GeometricSequence diagonal_mass_;
};

/// <nu, x*>(B) = <nu(B), x*>, a signed scalar measure with atoms
/// lambda(t) = <nu({t}), x*>.
class ScalarComponentMeasure {
 public:
  ScalarComponentMeasure(const DensityMeasure& parent, DualVector xstar);

  const DualVector& functional() const noexcept { return xstar_; }
  /// t -> <nu({t}), x*>
  const GeometricSequence& density() const noexcept { return lambda_; }

  /// <nu, x*>(B), for B of finite measure.
  Rational evaluate(const RepresentableSet& set) const;
  /// |<nu, x*>|(A)
  ExtendedRational variation(const RepresentableSet& set) const;
  /// integral over A of g d<nu, x*>. Throws DivergentSeriesError.
  Rational integral(const GeometricSequence& g, const RepresentableSet& set) const;
  /// integral over A of |g| d|<nu, x*>|
  ExtendedRational abs_integral(const GeometricSequence& g, const RepresentableSet& set) const;

 private:
  const DensityMeasure* parent_;
  DualVector xstar_;
  GeometricSequence lambda_;
};

inline ExtendedRational scalar_variation(const ScalarComponentMeasure& comp,
                                         const RepresentableSet& set) {
  return comp.variation(set);
}

}  // namespace vmeasure
