#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "core/representable_set.hpp"

namespace vmeasure {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Rejects zero denominators and junk.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational pow(const Rational& base, Index exponent);
inline int sign(const Rational& value) { return sgn(value); }

/// A rational number or +infinity.
///
/// Arithmetic follows the measure-theoretic conventions: a + inf = inf,
/// c * inf = inf for c > 0 and 0 * inf = 0. Infinity compares above every
/// finite value.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(const Rational& value) : value_(value) { value_.canonicalize(); }
  ExtendedRational(long value) : value_(value) {}

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }
  static ExtendedRational parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; throws on infinity.
  const Rational& value() const;

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b);
  ExtendedRational& operator+=(const ExtendedRational& other) { return *this = *this + other; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

 private:
  bool infinite_ = false;
  Rational value_;
};

/// Exact finite sums  sum_i a_i * sqrt(m_i)  with rational a_i and distinct
/// squarefree positive integers m_i (m = 1 carries the rational part).
///
/// Square roots of distinct squarefree integers are linearly independent over
/// the rationals, so the representation is canonical: equality is structural
/// and the sign of a nonzero value is decided by refining rational enclosures
/// until they exclude zero.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& value);
  QuadraticSurd(long value) : QuadraticSurd(Rational(value)) {}

  /// sqrt(x) for x >= 0.
  static QuadraticSurd sqrt(const Rational& x);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  int sign() const;
  double to_double() const;
  /// Rational bounds lo <= value <= hi, each root resolved to 2^-bits.
  std::pair<Rational, Rational> enclosure(unsigned bits) const;
  std::string str() const;

  /// Radicand -> coefficient. Radicands are pairwise independent (no product
  /// of two is a perfect square) and squarefree unless they carry the square
  /// of a prime beyond the trial-division bound.
  const std::map<Integer, Rational>& terms() const noexcept { return terms_; }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const Rational& k);
  friend QuadraticSurd operator*(const Rational& k, const QuadraticSurd& a) { return a * k; }
  QuadraticSurd& operator+=(const QuadraticSurd& other) { return *this = *this + other; }

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).is_zero(); }
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b);

 private:
  void add_term(const Integer& radicand, const Rational& coeff);
  std::map<Integer, Rational> terms_;
};

/// Value type of norms, variations and semivariations.
///
/// Exact values are quadratic surds (rational whenever the norm exponent is 1
/// or infinity). Approximate values are doubles, produced only when the
/// Euclidean norm runs in approximate mode; they contaminate every sum they
/// enter. +infinity absorbs everything, with 0 * inf = 0.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  ExtendedReal(const QuadraticSurd& value) : exact_(value) {}
  ExtendedReal(const Rational& value) : exact_(value) {}
  ExtendedReal(long value) : exact_(Rational(value)) {}
  ExtendedReal(const ExtendedRational& value);

  static ExtendedReal infinity() {
    ExtendedReal r;
    r.kind_ = Kind::Infinite;
    return r;
  }
  static ExtendedReal approximate(double value) {
    ExtendedReal r;
    r.kind_ = Kind::Approximate;
    r.approx_ = value;
    return r;
  }

  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  bool is_finite() const noexcept { return kind_ != Kind::Infinite; }
  bool is_exact() const noexcept { return kind_ == Kind::Exact; }
  bool is_approximate() const noexcept { return kind_ == Kind::Approximate; }
  bool is_zero() const;

  /// Exact value; throws unless is_exact().
  const QuadraticSurd& exact() const;
  std::optional<Rational> as_rational() const;
  double to_double() const;
  std::string str() const;

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b);
  /// Scaling by a nonnegative extended rational.
  friend ExtendedReal operator*(const ExtendedRational& k, const ExtendedReal& a);
  ExtendedReal& operator+=(const ExtendedReal& other) { return *this = *this + other; }

  /// Exact comparison; approximate operands compare as plain doubles.
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);

 private:
  enum class Kind { Exact, Infinite, Approximate };
  Kind kind_ = Kind::Exact;
  QuadraticSurd exact_;
  double approx_ = 0.0;
};

/// Relative tolerance used whenever an approximate value takes part in a
/// comparison.
inline constexpr double kApproxTolerance = 1e-9;

/// Equality, exact when both sides are exact, else within kApproxTolerance.
bool same_value(const ExtendedReal& a, const ExtendedReal& b);
/// a <= b, exact when both sides are exact, else within kApproxTolerance.
bool at_most(const ExtendedReal& a, const ExtendedReal& b);

}  // namespace vmeasure
