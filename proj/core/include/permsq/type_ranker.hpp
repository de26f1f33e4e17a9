#pragma once

#include <vector>

#include "permsq/classify.hpp"
#include "permsq/count.hpp"
#include "permsq/partitions.hpp"
#include "permsq/permutation.hpp"

namespace permsq {

/// Deterministic bijection between {0, ..., class_size(lambda) - 1} and the
/// permutations of cycle type lambda.
///
/// Cycle lengths are processed from longest to shortest. For the m cycles of
/// length l, the first digit picks the l*m-subset of still-unused points
/// (lexicographic combination rank); then, repeatedly, the smallest unplaced
/// point of that subset opens a cycle and l-1 further digits pick its
/// successors from the remaining points of the subset. The rank is the
/// mixed-radix number formed by these digits, most significant first.
class TypeRanker {
 public:
  explicit TypeRanker(Partition lambda);

  const Partition& partition() const noexcept { return lambda_; }
  const Count& size() const noexcept { return size_; }

  /// Throws std::out_of_range unless 0 <= k < size().
  Permutation unrank(const Count& k) const;

  /// Throws std::invalid_argument when w does not have cycle type lambda.
  Count rank(const Permutation& w) const;

 private:
  struct Group {
    int length;
    int multiplicity;
  };

  Partition lambda_;
  std::vector<Group> groups_;
  std::vector<Count> radices_;
  Count size_;
};

/// Rank/unrank over a whole class (a union of cycle types) of S_n. Types
/// are concatenated in partition-stream order.
class ClassIndex {
 public:
  ClassIndex(int n, ClassSelector selector);

  int n() const noexcept { return n_; }
  const ClassSelector& selector() const noexcept { return selector_; }
  const Count& size() const noexcept { return size_; }

  Permutation unrank(const Count& k) const;
  /// Throws std::invalid_argument when w is not in the class.
  Count rank(const Permutation& w) const;

 private:
  int n_;
  ClassSelector selector_;
  std::vector<TypeRanker> rankers_;
  std::vector<Count> offsets_;
  Count size_;
};

/// Explicit bijection class_{2n} x [2n+1] -> class_{2n+1} obtained by
/// ranking: (w, i) goes to the element of rank (i-1) |class_{2n}| + rank(w).
/// Works for any selector whose class sizes satisfy the (2n+1) relation;
/// throws std::invalid_argument otherwise or when w is outside the class.
Permutation canonical_pair(const ClassSelector& selector, const Permutation& w, Point i);

struct PairPreimage {
  Permutation w;
  Point i;
};

/// Inverse of canonical_pair; v must lie in the class at odd size 2n+1.
PairPreimage canonical_unpair(const ClassSelector& selector, const Permutation& v);

}  // namespace permsq
