#pragma once

#include <vector>

#include "permsq/classify.hpp"
#include "permsq/permutation.hpp"

namespace permsq {

/// Order-preserving bijection between two equal-size ground sets: the k-th
/// smallest source point maps to the k-th smallest target point.
class Relabeling {
 public:
  /// Both sets must be strictly increasing, positive, and the same size.
  Relabeling(std::vector<Point> source, std::vector<Point> target);

  /// source -> {1, ..., |source|}.
  static Relabeling onto_prefix(std::vector<Point> source);
  /// {1, ..., |target|} -> target.
  static Relabeling from_prefix(std::vector<Point> target);

  const std::vector<Point>& source() const noexcept { return source_; }
  const std::vector<Point>& target() const noexcept { return target_; }
  int size() const noexcept { return static_cast<int>(source_.size()); }

  /// Throws std::out_of_range when x is not in the source set.
  Point operator()(Point x) const;
  Relabeling inverse() const { return Relabeling(target_, source_); }

 private:
  std::vector<Point> source_;
  std::vector<Point> target_;
};

/// Transports w along r. w must fix every point outside r.source() and map
/// r.source() into itself. The result acts on [target_size] (default: the
/// largest target point) and fixes everything outside r.target().
Permutation relabel(const Permutation& w, const Relabeling& r);
Permutation relabel(const Permutation& w, const Relabeling& r, int target_size);

/// w on `subset`, identity elsewhere. `subset` must be a union of cycles of w.
Permutation restrict_to(const Permutation& w, const std::vector<Point>& subset);

/// The transposition (a, b) on [n]; identity when a == b.
Permutation transposition(int n, Point a, Point b);

/// Adding-and-swapping map D_i from S_m to S_{m+1}.
///
/// w must have no fixed point. D_{m+1}(w) extends w by the fixed point m+1.
/// For i <= m, D_i(w) conjugates that extension by the transposition (i, m+1):
/// i is replaced by m+1 inside w's cycles and (i) becomes the only fixed point.
Permutation add_and_swap(const Permutation& w, Point i);

struct AddSwapPreimage {
  Permutation w;
  Point i;
};

/// Inverse of add_and_swap. v must have exactly one fixed point, which is
/// returned as i.
AddSwapPreimage add_and_swap_inverse(const Permutation& v);

/// A mixed permutation split into its odd-support set, its even-cycle part,
/// and its odd-cycle part, each part relabeled order-preservingly onto a
/// prefix [k].
struct Type3Split {
  OddSupport support;
  Permutation even_part;
  Permutation odd_part;
};

/// eta must have at least one even and at least one odd cycle.
Type3Split split_type3(const Permutation& eta);

/// Inverse of split_type3. `support` must be a set of size odd_part.size()
/// inside [n]; even_part may only have even cycles and odd_part only odd ones.
Permutation join_type3(int n, const OddSupport& support, const Permutation& even_part,
                       const Permutation& odd_part);

/// (1,2) * w. An involution on S_n (n >= 2) exchanging EE and OE.
Permutation parity_toggle(const Permutation& w);

}  // namespace permsq
