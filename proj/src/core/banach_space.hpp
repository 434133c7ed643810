#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/exact.hpp"
#include "core/geometric_sequence.hpp"

namespace vmeasure {

enum class NormExponent { One, Two, Infinity };

/// Euclidean norms are exact quadratic surds in Exact mode and doubles in
/// Approximate mode. The exponents 1 and infinity are always exact.
enum class ArithmeticMode { Exact, Approximate };

std::string to_string(NormExponent p);
NormExponent dual_exponent(NormExponent p);

/// R^n with the p-norm, p in {1, 2, infinity}.
struct FiniteDimSpace {
  std::size_t dim = 1;
  NormExponent p = NormExponent::Infinity;
  ArithmeticMode mode = ArithmeticMode::Exact;

  FiniteDimSpace dual() const { return {dim, dual_exponent(p), mode}; }

  // The arithmetic mode does not change the space.
  friend bool operator==(const FiniteDimSpace& a, const FiniteDimSpace& b) {
    return a.dim == b.dim && a.p == b.p;
  }
};

class FiniteDimVector {
 public:
  FiniteDimVector(FiniteDimSpace space, std::vector<Rational> coords);

  static FiniteDimVector zero(const FiniteDimSpace& space);
  static FiniteDimVector basis(const FiniteDimSpace& space, std::size_t j);

  const FiniteDimSpace& space() const noexcept { return space_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t j) const { return coords_.at(j); }
  bool is_zero() const;

  FiniteDimVector scaled(const Rational& k) const;
  /// Same coordinates viewed in another space of equal dimension.
  FiniteDimVector in_space(const FiniteDimSpace& space) const;
  std::string str() const;

  friend FiniteDimVector operator+(const FiniteDimVector& a, const FiniteDimVector& b);
  friend FiniteDimVector operator-(const FiniteDimVector& a, const FiniteDimVector& b);
  friend bool operator==(const FiniteDimVector& a, const FiniteDimVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  FiniteDimSpace space_;
  std::vector<Rational> coords_;
};

ExtendedReal norm(const FiniteDimVector& v);
/// sum_j v_j^2, whatever the exponent of v's space.
Rational euclidean_norm_squared(const FiniteDimVector& v);
/// sum_i v_i x*_i. Throws DimensionMismatchError.
Rational pairing(const FiniteDimVector& v, const FiniteDimVector& xstar);
/// v = lambda * w for some rational lambda (zero vectors are parallel to all).
bool parallel(const FiniteDimVector& v, const FiniteDimVector& w);

struct DualBallTerm {
  ExtendedRational coeff;
  FiniteDimVector vec;
};

struct DualBallMax {
  ExtendedReal value;
  /// Terms after dropping zeros and merging parallel vectors; `signs` refers
  /// to these.
  std::vector<DualBallTerm> effective_terms;
  std::vector<int> signs;
  /// A dual-ball element attaining `value`. For p = 2 this is the unnormalized
  /// direction y = sum eps_i c_i v_i and the attaining functional is y/|y|.
  std::optional<FiniteDimVector> dual_witness;
  bool witness_normalized = true;
};

inline constexpr std::size_t kMaxSignTerms = 20;

/// sup over x* in the dual unit ball of sum_i c_i |<v_i, x*>|.
///
/// The objective is convex in x*, so the supremum sits at an extreme point and
/// equals max over sign patterns eps of |sum_i eps_i c_i v_i|. Parallel
/// vectors are merged first; patterns are scanned in lexicographic order
/// (+ before -, first sign fixed by symmetry) and the first maximum is kept.
/// Throws MixedSpaceError, TooManyTermsError (more than kMaxSignTerms
/// effective terms) or InvalidArgumentError on a negative coefficient.
DualBallMax dual_ball_abs_max(const FiniteDimSpace& space, std::span<const DualBallTerm> terms);

/// Element of the sequence space with entries given by a geometric sequence.
class C0DiagonalVector {
 public:
  C0DiagonalVector() = default;
  explicit C0DiagonalVector(GeometricSequence entries) : entries_(std::move(entries)) {}

  const GeometricSequence& entries() const noexcept { return entries_; }
  Rational operator[](Index t) const { return entries_(t); }

  /// entries(t) -> 0
  bool in_c0() const { return entries_.tends_to_zero(); }
  ExtendedRational sup_norm() const { return seq_sup_abs(entries_, RepresentableSet::all()); }
  /// <v, x*> for x* in l^1. Throws InvalidArgumentError when x* is not summable.
  Rational pairing(const GeometricSequence& xstar) const;

  friend bool operator==(const C0DiagonalVector&, const C0DiagonalVector&) = default;

 private:
  GeometricSequence entries_;
};

using Vector = std::variant<FiniteDimVector, C0DiagonalVector>;

std::string to_string(const Vector& v);

}  // namespace vmeasure
