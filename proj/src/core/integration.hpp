#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/banach_space.hpp"
#include "core/measure_space.hpp"
#include "core/vector_functions.hpp"

namespace vmeasure {

struct IntegrabilityVerdict {
  bool bochner = false;
  bool pettis = false;
  bool dunford = false;
  ExtendedReal dunford_norm;
  ExtendedReal bochner_norm;
  /// Why Pettis integrability fails, when it does.
  std::string witness;
  /// The candidate integral over N that escapes the target space.
  std::optional<Vector> witness_vector;
};

struct LocalIntegrability {
  bool locally_pettis = false;
  bool locally_bochner = false;
};

/// One atom of the measure paired with the value of F there.
struct FunctionAtom {
  Index t = 0;
  ExtendedRational mass;
  FiniteDimVector value;
};

/// F restricted to a set, split into atoms below a cutoff T and a tail
/// where mu_t F(t) = c (rho r)^t w, summed in closed form:
///   integral over the set of <F, x*> dmu
///     = sum_atoms mass <value, x*> + tail_mass <tail_direction, x*>.
struct CollapsedFunction {
  std::vector<FunctionAtom> atoms;
  ExtendedRational tail_mass;
  FiniteDimVector tail_direction;
};

CollapsedFunction collapse(const RankDecomposedFunction& f, const AtomicMeasureSpace& space,
                           const RepresentableSet& set);

/// integral over `set` of |F| dmu
ExtendedReal bochner_norm(const VectorFunction& f, const AtomicMeasureSpace& space,
                          const RepresentableSet& set = RepresentableSet::all());

/// Bochner integral of F over `set`, summed atom by atom with the tail in
/// closed form. Throws NotBochnerIntegrableError when the norm integral
/// diverges.
Vector bochner_integral(const VectorFunction& f, const AtomicMeasureSpace& space,
                        const RepresentableSet& set);

/// sup over the dual unit ball of integral over `set` of |<F, x*>| dmu.
/// For diagonal F this is sup_t mu_t |s(t)|, since the extreme points of the
/// unit ball of l^1 are the signed unit vectors.
ExtendedReal dunford_norm(const VectorFunction& f, const AtomicMeasureSpace& space,
                          const RepresentableSet& set = RepresentableSet::all());

/// Pettis integral of chi_set F, computed functional by functional (the
/// coordinate functionals in R^n, the unit vectors e_t in c0). Throws
/// NotDunfordError or NotPettisError (with the escaping candidate as witness).
Vector pettis_integral(const VectorFunction& f, const AtomicMeasureSpace& space,
                       const RepresentableSet& set);

IntegrabilityVerdict pettis_decide(const VectorFunction& f, const AtomicMeasureSpace& space);

/// Decides whether chi_B F is Pettis (Bochner) integrable for every B of
/// finite measure. Throws NotLocallyDeterminedError.
LocalIntegrability locally_integrable(const VectorFunction& f, const AtomicMeasureSpace& space);

}  // namespace vmeasure
