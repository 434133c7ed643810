#pragma once

// Reference computations used by the tests. None of these call into the
// closed forms they are checked against.

#include <ostream>
#include <random>
#include <vector>

#include "core/banach_space.hpp"
#include "core/exact.hpp"
#include "core/geometric_sequence.hpp"

namespace vmeasure::oracle {

inline Rational random_rational(std::mt19937_64& rng, long range, long denom) {
  std::uniform_int_distribution<long> num(-range * denom, range * denom);
  Rational r(num(rng), denom);
  r.canonicalize();
  return r;
}

/// A point of the unit ball of `dual` (exponent of the dual space), exact.
/// For the Euclidean ball the point lies on the sphere: inverse stereographic
/// projection keeps rational coordinates.
inline FiniteDimVector sample_dual_ball(const FiniteDimSpace& dual, std::mt19937_64& rng) {
  const std::size_t n = dual.dim;
  std::vector<Rational> x(n);
  switch (dual.p) {
    case NormExponent::Infinity:
      for (auto& c : x) c = random_rational(rng, 1, 97);
      break;
    case NormExponent::One: {
      Rational total = 0;
      for (auto& c : x) {
        c = random_rational(rng, 1, 89);
        total += abs(c);
      }
      std::uniform_int_distribution<int> shrink(1, 4);
      const Rational scale = total == 0 ? Rational(0) : Rational(Rational(1) / total);
      for (auto& c : x) c = Rational(c * scale / shrink(rng));
      if (shrink(rng) == 1) {
        std::fill(x.begin(), x.end(), Rational(0));
        x[rng() % n] = 1;
      }
      break;
    }
    case NormExponent::Two: {
      if (n == 1) {
        x[0] = (rng() & 1) ? 1 : -1;
        break;
      }
      std::vector<Rational> u(n - 1);
      Rational sq = 0;
      for (auto& c : u) {
        c = random_rational(rng, 3, 29);
        sq += c * c;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) x[i] = Rational(2 * u[i] / (sq + 1));
      x[n - 1] = Rational((sq - 1) / (sq + 1));
      break;
    }
  }
  return FiniteDimVector(dual, std::move(x));
}

/// Extreme points of the dual ball for p in {1, inf}: signed unit vectors of
/// l^1 (p = inf) or sign vectors of l^inf (p = 1).
inline std::vector<FiniteDimVector> dual_extreme_points(const FiniteDimSpace& space) {
  const FiniteDimSpace dual = space.dual();
  std::vector<FiniteDimVector> out;
  if (space.p == NormExponent::Infinity) {
    for (std::size_t j = 0; j < space.dim; ++j)
      for (int s : {1, -1}) {
        std::vector<Rational> x(space.dim, Rational(0));
        x[j] = s;
        out.emplace_back(dual, std::move(x));
      }
  } else if (space.p == NormExponent::One) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << space.dim); ++mask) {
      std::vector<Rational> x(space.dim);
      for (std::size_t j = 0; j < space.dim; ++j) x[j] = (mask >> j) & 1 ? -1 : 1;
      out.emplace_back(dual, std::move(x));
    }
  }
  return out;
}

/// sum_i c_i |<v_i, x*>|, all coefficients finite.
inline Rational abs_pairing_sum(const std::vector<DualBallTerm>& terms, const FiniteDimVector& xstar) {
  Rational total = 0;
  for (const auto& term : terms) {
    Rational s = 0;
    for (std::size_t j = 0; j < term.vec.dim(); ++j) s += term.vec[j] * xstar[j];
    total += term.coeff.value() * abs(s);
  }
  return total;
}

/// sum_{t < n} s(t) by direct evaluation.
inline Rational partial_sum(const GeometricSequence& s, Index n) {
  Rational total = 0;
  for (Index t = 0; t < n; ++t) total += s(t);
  return total;
}

}  // namespace vmeasure::oracle

namespace vmeasure {

inline void PrintTo(const ExtendedReal& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const ExtendedRational& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const FiniteDimVector& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const GeometricSequence& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const RepresentableSet& v, std::ostream* os) { *os << v.str(); }

}  // namespace vmeasure
