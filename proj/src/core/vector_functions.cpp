#include "core/vector_functions.hpp"

#include <algorithm>
#include <functional>

#include "core/errors.hpp"

namespace vmeasure {

namespace {

TailNormalForm tail_normal_form(const FiniteDimSpace& space, const std::vector<RankTerm>& terms) {
  Index start = 0;
  std::optional<Rational> ratio;
  FiniteDimVector direction = FiniteDimVector::zero(space);
  for (const auto& term : terms) {
    start = std::max(start, term.seq.tail_start());
    if (term.seq.tail_is_zero()) continue;
    if (ratio && *ratio != term.seq.tail_ratio())
      throw MixedTailRatioError("rank terms have tail ratios " + to_string(*ratio) + " and " +
                                to_string(term.seq.tail_ratio()));
    ratio = term.seq.tail_ratio();
    direction = direction + term.vec.scaled(term.seq.tail_coeff());
  }
  return TailNormalForm{start, ratio.value_or(Rational(0)), std::move(direction)};
}

}  // namespace

RankDecomposedFunction::RankDecomposedFunction(FiniteDimSpace space, std::vector<RankTerm> terms)
    : space_(space), terms_(std::move(terms)), tail_(tail_normal_form(space_, {})) {
  for (auto& term : terms_) {
    if (term.vec.dim() != space_.dim)
      throw DimensionMismatchError("rank term vector " + term.vec.str() + " is not in R^" +
                                   std::to_string(space_.dim));
    term.vec = term.vec.in_space(space_);
  }
  tail_ = tail_normal_form(space_, terms_);
}

RankDecomposedFunction RankDecomposedFunction::rank_one(const GeometricSequence& f,
                                                        const FiniteDimVector& x) {
  return RankDecomposedFunction(x.space(), {RankTerm{f, x}});
}

FiniteDimVector RankDecomposedFunction::operator()(Index t) const {
  FiniteDimVector out = FiniteDimVector::zero(space_);
  for (const auto& term : terms_) {
    const Rational s = term.seq(t);
    if (s != 0) out = out + term.vec.scaled(s);
  }
  return out;
}

GeometricSequence RankDecomposedFunction::coordinate(std::size_t j) const {
  GeometricSequence out;
  for (const auto& term : terms_) out = out + term.seq.scaled(term.vec[j]);
  return out;
}

GeometricSequence RankDecomposedFunction::pairing_sequence(const FiniteDimVector& xstar) const {
  GeometricSequence out;
  for (const auto& term : terms_) out = out + term.seq.scaled(pairing(term.vec, xstar));
  return out;
}

bool RankDecomposedFunction::is_rank_one() const {
  std::optional<FiniteDimVector> line;
  for (const auto& term : terms_) {
    if (term.seq.is_zero() || term.vec.is_zero()) continue;
    if (!line)
      line = term.vec;
    else if (!parallel(*line, term.vec))
      return false;
  }
  return true;
}

bool RankDecomposedFunction::is_zero() const {
  if (!tail_.direction.is_zero()) return false;
  for (Index t = 0; t < tail_.start; ++t)
    if (!(*this)(t).is_zero()) return false;
  return true;
}

RankDecomposedFunction RankDecomposedFunction::with_mode(ArithmeticMode mode) const {
  FiniteDimSpace space = space_;
  space.mode = mode;
  return RankDecomposedFunction(space, terms_);
}

bool is_zero(const VectorFunction& f) {
  return std::visit([](const auto& fn) { return fn.is_zero(); }, f);
}

Vector evaluate(const VectorFunction& f, Index t) {
  return std::visit([t](const auto& fn) -> Vector { return fn(t); }, f);
}

RankDecomposedFunction multiply(const GeometricSequence& g, const RankDecomposedFunction& f) {
  std::vector<RankTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& term : f.terms()) terms.push_back({g * term.seq, term.vec});
  return RankDecomposedFunction(f.space(), std::move(terms));
}

DiagonalFunction multiply(const GeometricSequence& g, const DiagonalFunction& f) {
  return DiagonalFunction(g * f.seq());
}

VectorFunction multiply(const GeometricSequence& g, const VectorFunction& f) {
  return std::visit([&g](const auto& fn) -> VectorFunction { return multiply(g, fn); }, f);
}

std::optional<EquivalenceTag> equal_ae(const VectorFunction& f, const VectorFunction& g,
                                       const AtomicMeasureSpace& space) {
  if (f.index() != g.index()) throw MixedSpaceError("functions have different target spaces");
  Index start = space.weights().tail_start();
  if (!space.infinite_atoms().empty()) start = std::max(start, space.infinite_atoms().back() + 1);
  std::function<bool(Index)> equal_at;
  if (is_diagonal(f)) {
    const auto& a = std::get<DiagonalFunction>(f).seq();
    const auto& b = std::get<DiagonalFunction>(g).seq();
    start = std::max({start, a.tail_start(), b.tail_start()});
    equal_at = [&a, &b](Index t) { return a(t) == b(t); };
  } else {
    const auto& a = std::get<RankDecomposedFunction>(f);
    const auto& b = std::get<RankDecomposedFunction>(g);
    if (!(a.space() == b.space())) throw MixedSpaceError("functions have different target spaces");
    start = std::max({start, a.tail().start, b.tail().start});
    equal_at = [&a, &b](Index t) { return a(t) == b(t); };
  }
  std::vector<Index> differ;
  for (Index t = 0; t < start; ++t)
    if (!equal_at(t)) differ.push_back(t);
  RepresentableSet null_set = RepresentableSet::finite(std::move(differ));
  // Beyond `start` both sides are geometric: two consecutive agreements force
  // agreement everywhere, otherwise they differ at all but at most one index.
  if (!equal_at(start) || !equal_at(start + 1)) null_set = null_set | RepresentableSet::from(start);
  if (!space.is_mu_null(null_set)) return std::nullopt;
  return EquivalenceTag{std::move(null_set)};
}

}  // namespace vmeasure
