#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "core/banach_space.hpp"
#include "core/geometric_sequence.hpp"
#include "core/measure_space.hpp"

namespace vmeasure {

struct RankTerm {
  GeometricSequence seq;
  FiniteDimVector vec;
};

/// F(t) = ratio^t * direction for every t >= start.
struct TailNormalForm {
  Index start = 0;
  Rational ratio = 0;
  FiniteDimVector direction;
};

/// F(t) = sum_k s_k(t) v_k with values in R^n.
///
/// All terms with a nonvanishing tail share one tail ratio, which gives the
/// tail normal form every closed-form integral relies on. Such functions are
/// pointwise limits of their truncations to [0, n), hence strongly (and
/// weakly) measurable; the two notions do not separate in this model.
class RankDecomposedFunction {
 public:
  /// Throws DimensionMismatchError or MixedTailRatioError.
  RankDecomposedFunction(FiniteDimSpace space, std::vector<RankTerm> terms);

  /// t -> f(t) x
  static RankDecomposedFunction rank_one(const GeometricSequence& f, const FiniteDimVector& x);

  const FiniteDimSpace& space() const noexcept { return space_; }
  const std::vector<RankTerm>& terms() const noexcept { return terms_; }
  const TailNormalForm& tail() const noexcept { return tail_; }

  FiniteDimVector operator()(Index t) const;
  /// t -> F(t)_j
  GeometricSequence coordinate(std::size_t j) const;
  /// t -> <F(t), x*>
  GeometricSequence pairing_sequence(const FiniteDimVector& xstar) const;
  /// Every value lies on one line through the origin.
  bool is_rank_one() const;
  bool is_zero() const;

  /// Same function with norms computed in `mode`.
  RankDecomposedFunction with_mode(ArithmeticMode mode) const;

 private:
  FiniteDimSpace space_;
  std::vector<RankTerm> terms_;
  TailNormalForm tail_;
};

/// F(t) = s(t) e_t in c0 with the sup norm.
class DiagonalFunction {
 public:
  explicit DiagonalFunction(GeometricSequence s) : s_(std::move(s)) {}

  const GeometricSequence& seq() const noexcept { return s_; }
  C0DiagonalVector operator()(Index t) const {
    return C0DiagonalVector(GeometricSequence::delta(t, s_(t)));
  }
  /// t -> <F(t), x*> = s(t) x*(t)
  GeometricSequence pairing_sequence(const GeometricSequence& xstar) const { return s_ * xstar; }
  /// t -> |F(t)|_inf
  GeometricSequence norm_sequence() const { return s_.abs(); }
  bool is_zero() const { return s_.is_zero(); }

  friend bool operator==(const DiagonalFunction&, const DiagonalFunction&) = default;

 private:
  GeometricSequence s_;
};

using VectorFunction = std::variant<RankDecomposedFunction, DiagonalFunction>;

inline bool is_diagonal(const VectorFunction& f) {
  return std::holds_alternative<DiagonalFunction>(f);
}
bool is_zero(const VectorFunction& f);
Vector evaluate(const VectorFunction& f, Index t);

/// t -> g(t) F(t)
RankDecomposedFunction multiply(const GeometricSequence& g, const RankDecomposedFunction& f);
DiagonalFunction multiply(const GeometricSequence& g, const DiagonalFunction& f);
VectorFunction multiply(const GeometricSequence& g, const VectorFunction& f);

/// A mu-null set off which two representatives agree.
struct EquivalenceTag {
  RepresentableSet null_set;
};

/// Tag witnessing F = G mu-a.e., or nullopt. Weak and strong a.e. equality
/// coincide here: coordinates separate points of both target families.
/// Throws MixedSpaceError when the targets differ.
std::optional<EquivalenceTag> equal_ae(const VectorFunction& f, const VectorFunction& g,
                                       const AtomicMeasureSpace& space);
inline bool weakly_equal_ae(const VectorFunction& f, const VectorFunction& g,
                            const AtomicMeasureSpace& space) {
  return equal_ae(f, g, space).has_value();
}

}  // namespace vmeasure
