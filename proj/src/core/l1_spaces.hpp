#pragma once

#include <optional>
#include <span>

#include "core/density_measure.hpp"

namespace vmeasure {

/// Membership of a multiplier g in the three L^1 spaces of nu_F.
struct MultiplierVerdict {
  bool in_L1w = false;
  bool in_L1 = false;
  bool in_L1_of_variation = false;
  ExtendedReal nu_norm;
  ExtendedReal variation_norm;
  /// integral of g dnu_F over N, when g is nu-integrable
  std::optional<Vector> integral;
};

/// Both sides of an isometry, plus whether the memberships agree.
struct IsometryCheck {
  ExtendedReal lhs;
  ExtendedReal rhs;
  bool equal = false;
  bool membership_agrees = false;
};

struct SimpleApproximation {
  GeometricSequence s_n;
  ExtendedReal defect;
};

/// g with every nu-null atom zeroed: the canonical representative of its class.
GeometricSequence normalize_multiplier(const GeometricSequence& g, const DensityMeasure& nu);

/// |g|_nu = sup over the dual ball of integral |g| d|<nu, x*>|, from the atoms of nu.
ExtendedReal nu_norm(const GeometricSequence& g, const DensityMeasure& nu);

bool in_L1w(const GeometricSequence& g, const DensityMeasure& nu);
/// Every set integral of g lands in the target space.
bool in_L1(const GeometricSequence& g, const DensityMeasure& nu);

/// lhs = nu_norm(g), rhs = Dunford norm of gF; membership compares
/// g in L^1_w with Dunford integrability of gF.
IsometryCheck mf_isometry_check(const GeometricSequence& g, const DensityMeasure& nu);

/// integral over A of g dnu_F, taken as the Pettis integral of gF over A and
/// checked against the scalar components on a fixed family of functionals.
/// Throws NotNuIntegrableError.
Vector integrate(const GeometricSequence& g, const DensityMeasure& nu, const RepresentableSet& set);

/// <integral over A of g dnu, x*> = integral over A of g d<nu, x*> for every listed x*.
bool integral_matches_components(const GeometricSequence& g, const DensityMeasure& nu,
                                 const RepresentableSet& set, std::span<const DualVector> xstars);

/// integral |g| d|nu_F|, summed over the atoms |nu_F({t})|. Throws NotLocallyBochnerError.
ExtendedReal variation_norm(const GeometricSequence& g, const DensityMeasure& nu);

/// lhs = variation_norm(g), rhs = integral |gF| dmu; membership compares
/// g in L^1(|nu_F|) with Bochner integrability of gF.
IsometryCheck l1_variation_check(const GeometricSequence& g, const DensityMeasure& nu);

/// s_n = g chi_[0,n) with defect |g - s_n|_nu. Throws NotNuIntegrableError.
SimpleApproximation simple_function_approximation(const GeometricSequence& g,
                                                  const DensityMeasure& nu, Index n);

MultiplierVerdict classify_multiplier(const GeometricSequence& g, const DensityMeasure& nu);

}  // namespace vmeasure
