#pragma once

#include <map>
#include <string>

#include "core/exact.hpp"
#include "core/representable_set.hpp"

namespace vmeasure {

/// A rational sequence on the natural numbers: finitely many exceptional
/// values below `tail_start`, then the geometric tail coeff * ratio^t.
///
/// Representations are kept canonical (zero exceptional values dropped, a
/// vanishing tail stored as coeff = ratio = 0, and tail_start lowered as far
/// as the exceptional values allow), so operator== is pointwise equality.
class GeometricSequence {
 public:
  /// The zero sequence.
  GeometricSequence() = default;
  /// Throws ValidationError on a negative ratio or an exceptional index at or
  /// beyond tail_start.
  GeometricSequence(std::map<Index, Rational> exceptional, Index tail_start, Rational coeff,
                    Rational ratio);

  static GeometricSequence zero() { return {}; }
  static GeometricSequence constant(const Rational& c) { return geometric(c, 1); }
  /// t -> c * r^t for every t >= start, zero below.
  static GeometricSequence geometric(const Rational& c, const Rational& r, Index start = 0);
  /// value at t, zero elsewhere
  static GeometricSequence delta(Index t, const Rational& value);
  static GeometricSequence indicator(const RepresentableSet& set);

  Rational operator()(Index t) const;

  const std::map<Index, Rational>& exceptional() const noexcept { return exceptional_; }
  Index tail_start() const noexcept { return tail_start_; }
  const Rational& tail_coeff() const noexcept { return coeff_; }
  const Rational& tail_ratio() const noexcept { return ratio_; }

  /// True when every value from tail_start on is zero.
  bool tail_is_zero() const noexcept { return coeff_ == 0; }
  bool is_zero() const noexcept { return coeff_ == 0 && exceptional_.empty(); }
  /// value(t) -> 0
  bool tends_to_zero() const { return coeff_ == 0 || ratio_ < 1; }

  GeometricSequence abs() const;
  GeometricSequence scaled(const Rational& k) const;
  /// Pointwise product with the indicator of `set`.
  GeometricSequence restricted(const RepresentableSet& set) const;
  /// Support as a representable set (cofinite when the tail is nonzero).
  RepresentableSet support() const;

  std::string str() const;

  /// Pointwise sum. Both tails must share the ratio unless one of them vanishes.
  friend GeometricSequence operator+(const GeometricSequence& a, const GeometricSequence& b);
  friend GeometricSequence operator-(const GeometricSequence& a, const GeometricSequence& b);
  friend GeometricSequence operator-(const GeometricSequence& a) { return a.scaled(-1); }
  /// Pointwise product; the tail ratio is the product of the ratios.
  friend GeometricSequence operator*(const GeometricSequence& a, const GeometricSequence& b);

  friend bool operator==(const GeometricSequence&, const GeometricSequence&) = default;

 private:
  void normalize();

  std::map<Index, Rational> exceptional_;
  Index tail_start_ = 0;
  Rational coeff_ = 0;
  Rational ratio_ = 0;
};

inline GeometricSequence seq_mul(const GeometricSequence& a, const GeometricSequence& b) {
  return a * b;
}

/// Sum over `set` of a sequence that is nonnegative there; the closed form
/// c r^T / (1 - r) is used for the tail. Throws NegativeTermError when a term
/// on `set` is negative.
ExtendedRational seq_sum(const GeometricSequence& s, const RepresentableSet& set);

/// Sum over `set` of a signed sequence. Throws DivergentSeriesError when the
/// series diverges (the tail has constant sign, so divergence is absolute).
Rational seq_sum_signed(const GeometricSequence& s, const RepresentableSet& set);

/// sup over t in `set` of |s(t)| (zero on the empty set).
ExtendedRational seq_sup_abs(const GeometricSequence& s, const RepresentableSet& set);

}  // namespace vmeasure
