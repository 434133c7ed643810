#include "core/geometric_sequence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "core/errors.hpp"

namespace vmeasure {

namespace {

constexpr Index kMaxMaterialized = Index{1} << 20;

void check_span(Index lo, Index hi) {
  if (hi > lo && hi - lo > kMaxMaterialized)
    throw TooLargeError("geometric sequence would materialize too many exceptional values");
}

}  // namespace

GeometricSequence::GeometricSequence(std::map<Index, Rational> exceptional, Index tail_start,
                                     Rational coeff, Rational ratio)
    : exceptional_(std::move(exceptional)),
      tail_start_(tail_start),
      coeff_(std::move(coeff)),
      ratio_(std::move(ratio)) {
  coeff_.canonicalize();
  ratio_.canonicalize();
  for (auto& [t, v] : exceptional_) v.canonicalize();
  if (ratio_ < 0) throw ValidationError("tail ratio must be nonnegative, got " + to_string(ratio_));
  if (!exceptional_.empty() && exceptional_.rbegin()->first >= tail_start_)
    throw ValidationError("exceptional index " + std::to_string(exceptional_.rbegin()->first) +
                          " is not below tail start " + std::to_string(tail_start_));
  normalize();
}

GeometricSequence GeometricSequence::geometric(const Rational& c, const Rational& r, Index start) {
  return GeometricSequence({}, start, c, r);
}

GeometricSequence GeometricSequence::delta(Index t, const Rational& value) {
  return GeometricSequence({{t, value}}, t + 1, 0, 0);
}

GeometricSequence GeometricSequence::indicator(const RepresentableSet& set) {
  return constant(1).restricted(set);
}

void GeometricSequence::normalize() {
  std::erase_if(exceptional_, [](const auto& kv) { return kv.second == 0; });
  if (coeff_ != 0 && ratio_ == 0) {
    // 0^0 = 1: only t = 0 can carry the tail.
    if (tail_start_ == 0) exceptional_[0] = coeff_;
    coeff_ = 0;
  }
  if (coeff_ == 0) {
    ratio_ = 0;
    tail_start_ = exceptional_.empty() ? 0 : exceptional_.rbegin()->first + 1;
    return;
  }
  if (tail_start_ == 0) return;
  Rational cur = coeff_ * pow(ratio_, tail_start_ - 1);
  while (tail_start_ > 0) {
    auto it = exceptional_.find(tail_start_ - 1);
    if (it == exceptional_.end() || it->second != cur) break;
    exceptional_.erase(it);
    --tail_start_;
    cur /= ratio_;
  }
}

Rational GeometricSequence::operator()(Index t) const {
  if (t < tail_start_) {
    auto it = exceptional_.find(t);
    return it == exceptional_.end() ? Rational(0) : it->second;
  }
  if (coeff_ == 0) return 0;
  return coeff_ * pow(ratio_, t);
}

GeometricSequence GeometricSequence::abs() const {
  GeometricSequence out = *this;
  for (auto& [t, v] : out.exceptional_) v = ::abs(v);
  out.coeff_ = ::abs(out.coeff_);
  return out;
}

GeometricSequence GeometricSequence::scaled(const Rational& k) const {
  if (k == 0) return {};
  GeometricSequence out = *this;
  for (auto& [t, v] : out.exceptional_) v *= k;
  out.coeff_ *= k;
  return out;
}

GeometricSequence GeometricSequence::restricted(const RepresentableSet& set) const {
  if (set.is_finite()) {
    std::map<Index, Rational> values;
    for (Index t : set.members()) values.emplace(t, (*this)(t));
    const Index start = set.members().empty() ? 0 : set.members().back() + 1;
    return GeometricSequence(std::move(values), start, 0, 0);
  }
  const auto& excluded = set.excluded();
  Index start = tail_start_;
  if (!tail_is_zero() && !excluded.empty() && excluded.back() >= start) start = excluded.back() + 1;
  check_span(tail_start_, start);
  std::map<Index, Rational> values;
  for (const auto& [t, v] : exceptional_)
    if (set.contains(t)) values.emplace(t, v);
  if (!tail_is_zero())
    for (Index t = tail_start_; t < start; ++t)
      if (set.contains(t)) values.emplace(t, (*this)(t));
  return GeometricSequence(std::move(values), start, coeff_, ratio_);
}

RepresentableSet GeometricSequence::support() const {
  std::vector<Index> keys;
  for (const auto& [t, v] : exceptional_) keys.push_back(t);
  if (tail_is_zero()) return RepresentableSet::finite(std::move(keys));
  std::vector<Index> zeros;
  for (Index t = 0; t < tail_start_; ++t)
    if (!exceptional_.contains(t)) zeros.push_back(t);
  return RepresentableSet::cofinite(std::move(zeros));
}

std::string GeometricSequence::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [t, v] : exceptional_) {
    os << (first ? "" : ", ") << t << ":" << to_string(v);
    first = false;
  }
  os << "}";
  if (!tail_is_zero())
    os << " + " << to_string(coeff_) << "*(" << to_string(ratio_) << ")^t for t>=" << tail_start_;
  return os.str();
}

namespace {

// Indices below `start` at which either operand may be nonzero.
std::set<Index> head_indices(const GeometricSequence& a, const GeometricSequence& b, Index start) {
  std::set<Index> keys;
  for (const auto& [t, v] : a.exceptional()) keys.insert(t);
  for (const auto& [t, v] : b.exceptional()) keys.insert(t);
  const Index lo = std::min(a.tail_start(), b.tail_start());
  check_span(lo, start);
  for (Index t = lo; t < start; ++t) keys.insert(t);
  return keys;
}

}  // namespace

GeometricSequence operator+(const GeometricSequence& a, const GeometricSequence& b) {
  if (!a.tail_is_zero() && !b.tail_is_zero() && a.ratio_ != b.ratio_)
    throw MixedTailRatioError("cannot add geometric tails with ratios " + to_string(a.ratio_) +
                              " and " + to_string(b.ratio_));
  const Index start = std::max(a.tail_start_, b.tail_start_);
  std::map<Index, Rational> values;
  for (Index t : head_indices(a, b, start)) values.emplace(t, a(t) + b(t));
  const Rational& ratio = a.tail_is_zero() ? b.ratio_ : a.ratio_;
  return GeometricSequence(std::move(values), start, a.coeff_ + b.coeff_, ratio);
}

GeometricSequence operator-(const GeometricSequence& a, const GeometricSequence& b) {
  return a + (-b);
}

GeometricSequence operator*(const GeometricSequence& a, const GeometricSequence& b) {
  const Index start = std::max(a.tail_start_, b.tail_start_);
  std::map<Index, Rational> values;
  for (Index t : head_indices(a, b, start)) values.emplace(t, a(t) * b(t));
  return GeometricSequence(std::move(values), start, a.coeff_ * b.coeff_, a.ratio_ * b.ratio_);
}

ExtendedRational seq_sum(const GeometricSequence& s, const RepresentableSet& set) {
  auto require_nonnegative = [&](Index t, const Rational& v) {
    if (v < 0)
      throw NegativeTermError("negative term " + to_string(v) + " at index " + std::to_string(t) +
                              " in nonnegative sum");
  };
  if (set.is_finite()) {
    Rational total = 0;
    for (Index t : set.members()) {
      const Rational v = s(t);
      require_nonnegative(t, v);
      total += v;
    }
    return total;
  }
  Rational total = 0;
  for (const auto& [t, v] : s.exceptional()) {
    if (!set.contains(t)) continue;
    require_nonnegative(t, v);
    total += v;
  }
  if (s.tail_is_zero()) return total;
  if (s.tail_coeff() < 0) {
    Index t = 0;
    set.first_member_at_least(s.tail_start(), t);
    require_nonnegative(t, s(t));
  }
  if (s.tail_ratio() >= 1) return ExtendedRational::infinity();
  const Index start = s.tail_start();
  total += s.tail_coeff() * pow(s.tail_ratio(), start) / (1 - s.tail_ratio());
  for (Index e : set.excluded())
    if (e >= start) total -= s(e);
  return total;
}

Rational seq_sum_signed(const GeometricSequence& s, const RepresentableSet& set) {
  if (set.is_finite()) {
    Rational total = 0;
    for (Index t : set.members()) total += s(t);
    return total;
  }
  Rational total = 0;
  for (const auto& [t, v] : s.exceptional())
    if (set.contains(t)) total += v;
  if (s.tail_is_zero()) return total;
  if (s.tail_ratio() >= 1)
    throw DivergentSeriesError("series with tail " + to_string(s.tail_coeff()) + "*(" +
                               to_string(s.tail_ratio()) + ")^t diverges on " + set.str());
  const Index start = s.tail_start();
  total += s.tail_coeff() * pow(s.tail_ratio(), start) / (1 - s.tail_ratio());
  for (Index e : set.excluded())
    if (e >= start) total -= s(e);
  return total;
}

ExtendedRational seq_sup_abs(const GeometricSequence& s, const RepresentableSet& set) {
  Rational best = 0;
  if (set.is_finite()) {
    for (Index t : set.members()) best = std::max(best, Rational(::abs(s(t))));
    return best;
  }
  for (const auto& [t, v] : s.exceptional())
    if (set.contains(t)) best = std::max(best, Rational(::abs(v)));
  if (s.tail_is_zero()) return best;
  if (s.tail_ratio() > 1) return ExtendedRational::infinity();
  Index first = 0;
  set.first_member_at_least(s.tail_start(), first);
  return std::max(best, Rational(::abs(s(first))));
}

}  // namespace vmeasure
