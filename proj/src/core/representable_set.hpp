#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vmeasure {

using Index = std::uint64_t;

/// A finite or cofinite subset of the natural numbers.
///
/// These sets form an algebra (closed under complement, finite unions,
/// intersections and differences) on which membership is exact. The stored
/// index list is sorted and duplicate free: it holds the members of a finite
/// set, or the excluded indices of a cofinite one.
class RepresentableSet {
 public:
  /// The empty set.
  RepresentableSet() = default;

  static RepresentableSet finite(std::vector<Index> members);
  static RepresentableSet finite(std::initializer_list<Index> members) {
    return finite(std::vector<Index>(members));
  }
  static RepresentableSet cofinite(std::vector<Index> excluded);
  static RepresentableSet cofinite(std::initializer_list<Index> excluded) {
    return cofinite(std::vector<Index>(excluded));
  }
  static RepresentableSet empty() { return {}; }
  static RepresentableSet all() { return cofinite(std::vector<Index>{}); }
  /// [lo, hi)
  static RepresentableSet range(Index lo, Index hi);
  /// [lo, infinity)
  static RepresentableSet from(Index lo);

  bool is_finite() const noexcept { return !cofinite_; }
  bool is_cofinite() const noexcept { return cofinite_; }
  bool is_empty() const noexcept { return !cofinite_ && indices_.empty(); }
  bool contains(Index t) const;

  /// Members of a finite set.
  const std::vector<Index>& members() const;
  /// Excluded indices of a cofinite set.
  const std::vector<Index>& excluded() const;
  /// Members of a finite set, or excluded indices of a cofinite one.
  const std::vector<Index>& indices() const noexcept { return indices_; }

  RepresentableSet complement() const;
  RepresentableSet unite(const RepresentableSet& other) const;
  RepresentableSet intersect(const RepresentableSet& other) const;
  RepresentableSet minus(const RepresentableSet& other) const;
  /// A ∩ [0, n)
  RepresentableSet truncated(Index n) const;

  /// Smallest member that is >= lo. Always exists for cofinite sets.
  bool first_member_at_least(Index lo, Index& out) const;

  std::string str() const;

  friend bool operator==(const RepresentableSet&, const RepresentableSet&) = default;

 private:
  RepresentableSet(bool cofinite, std::vector<Index> indices)
      : cofinite_(cofinite), indices_(std::move(indices)) {}

  bool cofinite_ = false;
  std::vector<Index> indices_;
};

inline RepresentableSet operator|(const RepresentableSet& a, const RepresentableSet& b) {
  return a.unite(b);
}
inline RepresentableSet operator&(const RepresentableSet& a, const RepresentableSet& b) {
  return a.intersect(b);
}
inline RepresentableSet operator-(const RepresentableSet& a, const RepresentableSet& b) {
  return a.minus(b);
}

}  // namespace vmeasure
