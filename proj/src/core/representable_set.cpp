#include "core/representable_set.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "core/errors.hpp"

namespace vmeasure {

namespace {

std::vector<Index> normalized(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Index> set_union(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> set_intersection(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> set_difference(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RepresentableSet RepresentableSet::finite(std::vector<Index> members) {
  return RepresentableSet(false, normalized(std::move(members)));
}

RepresentableSet RepresentableSet::cofinite(std::vector<Index> excluded) {
  return RepresentableSet(true, normalized(std::move(excluded)));
}

RepresentableSet RepresentableSet::range(Index lo, Index hi) {
  std::vector<Index> members;
  for (Index t = lo; t < hi; ++t) members.push_back(t);
  return RepresentableSet(false, std::move(members));
}

RepresentableSet RepresentableSet::from(Index lo) { return range(0, lo).complement(); }

bool RepresentableSet::contains(Index t) const {
  const bool listed = std::binary_search(indices_.begin(), indices_.end(), t);
  return cofinite_ ? !listed : listed;
}

const std::vector<Index>& RepresentableSet::members() const {
  if (cofinite_) throw InvalidArgumentError("members() called on a cofinite set");
  return indices_;
}

const std::vector<Index>& RepresentableSet::excluded() const {
  if (!cofinite_) throw InvalidArgumentError("excluded() called on a finite set");
  return indices_;
}

RepresentableSet RepresentableSet::complement() const { return {!cofinite_, indices_}; }

RepresentableSet RepresentableSet::unite(const RepresentableSet& other) const {
  if (!cofinite_ && !other.cofinite_) return {false, set_union(indices_, other.indices_)};
  if (cofinite_ && other.cofinite_) return {true, set_intersection(indices_, other.indices_)};
  const auto& fin = cofinite_ ? other.indices_ : indices_;
  const auto& exc = cofinite_ ? indices_ : other.indices_;
  return {true, set_difference(exc, fin)};
}

RepresentableSet RepresentableSet::intersect(const RepresentableSet& other) const {
  if (!cofinite_ && !other.cofinite_) return {false, set_intersection(indices_, other.indices_)};
  if (cofinite_ && other.cofinite_) return {true, set_union(indices_, other.indices_)};
  const auto& fin = cofinite_ ? other.indices_ : indices_;
  const auto& exc = cofinite_ ? indices_ : other.indices_;
  return {false, set_difference(fin, exc)};
}

RepresentableSet RepresentableSet::minus(const RepresentableSet& other) const {
  return intersect(other.complement());
}

RepresentableSet RepresentableSet::truncated(Index n) const {
  if (!cofinite_) {
    std::vector<Index> out(indices_.begin(), std::lower_bound(indices_.begin(), indices_.end(), n));
    return {false, std::move(out)};
  }
  std::vector<Index> out;
  auto it = indices_.begin();
  for (Index t = 0; t < n; ++t) {
    while (it != indices_.end() && *it < t) ++it;
    if (it == indices_.end() || *it != t) out.push_back(t);
  }
  return {false, std::move(out)};
}

bool RepresentableSet::first_member_at_least(Index lo, Index& out) const {
  if (!cofinite_) {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), lo);
    if (it == indices_.end()) return false;
    out = *it;
    return true;
  }
  Index t = lo;
  auto it = std::lower_bound(indices_.begin(), indices_.end(), lo);
  while (it != indices_.end() && *it == t) {
    ++it;
    ++t;
  }
  out = t;
  return true;
}

std::string RepresentableSet::str() const {
  if (cofinite_ && indices_.empty()) return "N";
  std::ostringstream os;
  os << (cofinite_ ? "N\\{" : "{");
  for (std::size_t i = 0; i < indices_.size(); ++i) os << (i ? "," : "") << indices_[i];
  os << "}";
  return os.str();
}

}  // namespace vmeasure
