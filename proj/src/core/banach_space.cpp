#include "core/banach_space.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace vmeasure {

std::string to_string(NormExponent p) {
  switch (p) {
    case NormExponent::One: return "1";
    case NormExponent::Two: return "2";
    case NormExponent::Infinity: return "inf";
  }
  return "?";
}

NormExponent dual_exponent(NormExponent p) {
  switch (p) {
    case NormExponent::One: return NormExponent::Infinity;
    case NormExponent::Two: return NormExponent::Two;
    case NormExponent::Infinity: return NormExponent::One;
  }
  return p;
}

FiniteDimVector::FiniteDimVector(FiniteDimSpace space, std::vector<Rational> coords)
    : space_(space), coords_(std::move(coords)) {
  if (space_.dim == 0) throw ValidationError("dimension must be at least 1");
  if (coords_.size() != space_.dim)
    throw DimensionMismatchError("vector has " + std::to_string(coords_.size()) +
                                 " coordinates, space has dimension " +
                                 std::to_string(space_.dim));
  for (auto& c : coords_) c.canonicalize();
}

FiniteDimVector FiniteDimVector::zero(const FiniteDimSpace& space) {
  return FiniteDimVector(space, std::vector<Rational>(space.dim, Rational(0)));
}

FiniteDimVector FiniteDimVector::basis(const FiniteDimSpace& space, std::size_t j) {
  FiniteDimVector v = zero(space);
  v.coords_.at(j) = 1;
  return v;
}

bool FiniteDimVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

FiniteDimVector FiniteDimVector::scaled(const Rational& k) const {
  FiniteDimVector out = *this;
  for (auto& c : out.coords_) c *= k;
  return out;
}

FiniteDimVector FiniteDimVector::in_space(const FiniteDimSpace& space) const {
  return FiniteDimVector(space, coords_);
}

std::string FiniteDimVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) os << (j ? "," : "") << to_string(coords_[j]);
  os << ")";
  return os.str();
}

FiniteDimVector operator+(const FiniteDimVector& a, const FiniteDimVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("adding vectors of different dimension");
  FiniteDimVector out = a;
  for (std::size_t j = 0; j < a.dim(); ++j) out.coords_[j] += b.coords_[j];
  return out;
}

FiniteDimVector operator-(const FiniteDimVector& a, const FiniteDimVector& b) {
  return a + b.scaled(-1);
}

Rational euclidean_norm_squared(const FiniteDimVector& v) {
  Rational s = 0;
  for (const auto& c : v.coords()) s += c * c;
  return s;
}

namespace {

// |y|_p for p in {1, inf}; |y|_2^2 for p = 2.
Rational norm_key(const std::vector<Rational>& y, NormExponent p) {
  Rational out = 0;
  for (const auto& c : y) {
    switch (p) {
      case NormExponent::One: out += ::abs(c); break;
      case NormExponent::Two: out += c * c; break;
      case NormExponent::Infinity:
        if (::abs(c) > out) out = ::abs(c);
        break;
    }
  }
  return out;
}

ExtendedReal from_norm_key(const Rational& key, const FiniteDimSpace& space) {
  if (space.p != NormExponent::Two) return ExtendedReal(key);
  if (space.mode == ArithmeticMode::Approximate) return ExtendedReal::approximate(std::sqrt(key.get_d()));
  return ExtendedReal(QuadraticSurd::sqrt(key));
}

}  // namespace

ExtendedReal norm(const FiniteDimVector& v) {
  return from_norm_key(norm_key(v.coords(), v.space().p), v.space());
}

Rational pairing(const FiniteDimVector& v, const FiniteDimVector& xstar) {
  if (v.dim() != xstar.dim())
    throw DimensionMismatchError("pairing a vector of dimension " + std::to_string(v.dim()) +
                                 " with a functional of dimension " + std::to_string(xstar.dim()));
  Rational s = 0;
  for (std::size_t j = 0; j < v.dim(); ++j) s += v[j] * xstar[j];
  return s;
}

bool parallel(const FiniteDimVector& v, const FiniteDimVector& w) {
  if (v.dim() != w.dim()) return false;
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = i + 1; j < v.dim(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  return true;
}

DualBallMax dual_ball_abs_max(const FiniteDimSpace& space, std::span<const DualBallTerm> terms) {
  DualBallMax out;
  // Merge parallel vectors: c |<lambda u, x*>| = (c |lambda|) |<u, x*>|, with
  // u normalized so that its first nonzero coordinate is 1.
  std::vector<std::vector<Rational>> directions;
  std::vector<Rational> weights;
  for (const auto& term : terms) {
    if (!(term.vec.space() == space))
      throw MixedSpaceError("dual-ball term lives in R^" + std::to_string(term.vec.dim()) + " p=" +
                            to_string(term.vec.space().p) + ", expected R^" +
                            std::to_string(space.dim) + " p=" + to_string(space.p));
    if (term.coeff < ExtendedRational(0))
      throw InvalidArgumentError("negative coefficient in dual-ball maximization");
    if (term.coeff == ExtendedRational(0) || term.vec.is_zero()) continue;
    if (term.coeff.is_infinite()) {
      out.value = ExtendedReal::infinity();
      return out;
    }
    std::size_t lead = 0;
    while (term.vec[lead] == 0) ++lead;
    const Rational lambda = term.vec[lead];
    std::vector<Rational> u = term.vec.coords();
    for (auto& c : u) c /= lambda;
    const Rational w = term.coeff.value() * ::abs(lambda);
    std::size_t k = 0;
    while (k < directions.size() && directions[k] != u) ++k;
    if (k == directions.size()) {
      directions.push_back(std::move(u));
      weights.push_back(w);
    } else {
      weights[k] += w;
    }
  }
  const std::size_t m = directions.size();
  for (std::size_t k = 0; k < m; ++k)
    out.effective_terms.push_back({weights[k], FiniteDimVector(space, directions[k])});
  if (m == 0) {
    out.value = ExtendedReal(0);
    out.dual_witness = FiniteDimVector::zero(space.dual());
    return out;
  }
  if (m > kMaxSignTerms)
    throw TooManyTermsError(std::to_string(m) + " distinct directions exceed the sign-pattern cap " +
                            std::to_string(kMaxSignTerms));

  std::vector<std::vector<Rational>> scaled(m);
  for (std::size_t k = 0; k < m; ++k) {
    scaled[k] = directions[k];
    for (auto& c : scaled[k]) c *= weights[k];
  }
  const std::uint64_t patterns = std::uint64_t{1} << (m - 1);
  Rational best_key = -1;
  std::uint64_t best_mask = 0;
  std::vector<Rational> best_y;
  std::vector<Rational> y(space.dim);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    for (auto& c : y) c = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const bool negative = k > 0 && ((mask >> (m - 1 - k)) & 1u);
      for (std::size_t j = 0; j < space.dim; ++j) {
        if (negative)
          y[j] -= scaled[k][j];
        else
          y[j] += scaled[k][j];
      }
    }
    Rational key = norm_key(y, space.p);
    if (key > best_key) {
      best_key = std::move(key);
      best_mask = mask;
      best_y = y;
    }
  }
  for (std::size_t k = 0; k < m; ++k)
    out.signs.push_back(k > 0 && ((best_mask >> (m - 1 - k)) & 1u) ? -1 : 1);
  out.value = from_norm_key(best_key, space);

  const FiniteDimSpace dual = space.dual();
  std::vector<Rational> witness(space.dim, Rational(0));
  switch (space.p) {
    case NormExponent::Infinity: {
      std::size_t arg = 0;
      for (std::size_t j = 1; j < space.dim; ++j)
        if (::abs(best_y[j]) > ::abs(best_y[arg])) arg = j;
      witness[arg] = best_y[arg] < 0 ? -1 : 1;
      break;
    }
    case NormExponent::One:
      for (std::size_t j = 0; j < space.dim; ++j) witness[j] = best_y[j] < 0 ? -1 : 1;
      break;
    case NormExponent::Two:
      witness = best_y;
      out.witness_normalized = false;
      break;
  }
  out.dual_witness = FiniteDimVector(dual, std::move(witness));
  return out;
}

Rational C0DiagonalVector::pairing(const GeometricSequence& xstar) const {
  if (seq_sum(xstar.abs(), RepresentableSet::all()).is_infinite())
    throw InvalidArgumentError("functional is not summable: " + xstar.str());
  return seq_sum_signed(entries_ * xstar, RepresentableSet::all());
}

std::string to_string(const Vector& v) {
  if (const auto* f = std::get_if<FiniteDimVector>(&v)) return f->str();
  return "c0" + std::get<C0DiagonalVector>(v).entries().str();
}

}  // namespace vmeasure
