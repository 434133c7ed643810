#pragma once

#include "core/density_measure.hpp"

namespace vmeasure::fixture {

inline FiniteDimVector vec(const FiniteDimSpace& space, std::vector<Rational> coords) {
  return FiniteDimVector(space, std::move(coords));
}

/// Counting measure, F(0) = (1,0), F(1) = (0,2), zero afterwards.
inline RankDecomposedFunction e1_function(NormExponent p) {
  const FiniteDimSpace space{2, p};
  return RankDecomposedFunction(space, {{GeometricSequence::delta(0, 1), vec(space, {1, 0})},
                                        {GeometricSequence::delta(1, 2), vec(space, {0, 1})}});
}

/// Counting measure, F(t) = 2^-t (3,4) in the Euclidean plane.
inline RankDecomposedFunction e3_function() {
  const FiniteDimSpace space{2, NormExponent::Two};
  return RankDecomposedFunction::rank_one(GeometricSequence::geometric(1, Rational(1, 2)),
                                          vec(space, {3, 4}));
}

/// Counting measure, F(t) = (1,1) in the max-norm plane.
inline RankDecomposedFunction constant_function() {
  const FiniteDimSpace space{2, NormExponent::Infinity};
  return RankDecomposedFunction::rank_one(GeometricSequence::constant(1), vec(space, {1, 1}));
}

inline DensityMeasure measure(RankDecomposedFunction f,
                              AtomicMeasureSpace space = AtomicMeasureSpace::counting()) {
  return DensityMeasure(VectorFunction(std::move(f)), std::move(space));
}

inline DensityMeasure diagonal(GeometricSequence s,
                               AtomicMeasureSpace space = AtomicMeasureSpace::counting()) {
  return DensityMeasure(VectorFunction(DiagonalFunction(std::move(s))), std::move(space));
}

}  // namespace vmeasure::fixture
