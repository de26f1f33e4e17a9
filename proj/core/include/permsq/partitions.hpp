#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "permsq/count.hpp"
#include "permsq/permutation.hpp"

namespace permsq {

/// Integer partition with parts in weakly decreasing order.
struct Partition {
  int n = 0;
  std::vector<int> parts;

  /// Throws std::invalid_argument unless parts are positive, weakly
  /// decreasing and sum to n.
  static Partition from_parts(std::vector<int> parts);

  CycleType to_cycle_type() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition partition_of(const CycleType& t);

/// Every partition of n exactly once, in reverse lexicographic order:
/// [4], [3,1], [2,2], [2,1,1], [1,1,1,1]. n = 0 yields the empty partition.
class PartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PartitionRange;
    explicit iterator(int n);

    Partition current_;
    bool done_ = true;
  };

  explicit PartitionRange(int n);

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

inline PartitionRange partitions(int n) { return PartitionRange(n); }

/// Materialized partitions(n).
std::vector<Partition> partition_list(int n);

/// Number of permutations of S_n with cycle type lambda:
/// n! / prod_l (l^{m_l} m_l!).
Count class_size(const Partition& lambda);
Count class_size(const CycleType& t);

}  // namespace permsq
