#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsq {

/// A point of the ground set [n] = {1, ..., n}. Points are always 1-indexed.
using Point = int;

/// A bijection on [n], stored in one-line form.
///
/// Every constructor validates bijectivity, so a Permutation value is always
/// well formed. Values are immutable and cheap to copy for the small n this
/// library enumerates.
class Permutation {
 public:
  /// Identity on [n]. Throws std::invalid_argument if n < 1.
  static Permutation identity(int n);

  /// Builds from one-line notation: images[i-1] = w(i). Throws
  /// std::invalid_argument unless the images are exactly {1..n} in some order.
  static Permutation from_images(std::vector<Point> images);

  int size() const noexcept { return static_cast<int>(image_.size()); }

  /// w(i), 1-indexed. Unchecked.
  Point operator()(Point i) const noexcept { return image_[static_cast<std::size_t>(i - 1)]; }

  /// w(i) with a range check.
  Point at(Point i) const;

  std::span<const Point> images() const noexcept { return image_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> image) : image_(std::move(image)) {}

  std::vector<Point> image_;
};

/// A single cycle (a_1, ..., a_m), canonically rotated so its minimum is first.
class Cycle {
 public:
  /// Rotates `elements` into canonical order. Throws std::invalid_argument
  /// for an empty cycle, a repeated element, or an element < 1.
  explicit Cycle(std::vector<Point> elements);

  int length() const noexcept { return static_cast<int>(elements_.size()); }
  Point front() const noexcept { return elements_.front(); }
  std::span<const Point> elements() const noexcept { return elements_; }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Point> elements_;
};

/// Disjoint cycles covering [n], sorted by their minimum element, 1-cycles
/// included.
struct CycleDecomposition {
  int n = 0;
  std::vector<Cycle> cycles;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// Multiset of cycle lengths: length -> number of cycles of that length.
class CycleType {
 public:
  /// Throws std::invalid_argument unless sum(length * multiplicity) == n and
  /// every length and multiplicity is positive.
  CycleType(int n, std::map<int, int> multiplicity);

  int n() const noexcept { return n_; }
  const std::map<int, int>& multiplicities() const noexcept { return multiplicity_; }

  /// Number of cycles of length `length` (0 when absent).
  int count(int length) const noexcept;

  /// Number of cycles of even length.
  int even_cycle_count() const noexcept;

  bool has_even_cycle() const noexcept;
  bool has_odd_cycle() const noexcept;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  int n_;
  std::map<int, int> multiplicity_;
};

/// result(i) = u(w(i)); w is applied first. Throws std::invalid_argument on
/// a size mismatch.
Permutation compose(const Permutation& u, const Permutation& w);

Permutation square(const Permutation& w);

CycleDecomposition cycle_decompose(const Permutation& w);

/// Points not mentioned in `cycles` become fixed points. Throws
/// std::invalid_argument on a repeated element or an element outside [n].
Permutation from_cycles(int n, std::span<const Cycle> cycles);
Permutation from_cycles(const CycleDecomposition& d);

CycleType cycle_type(const Permutation& w);

/// Parses `( '(' int (',' int)* ')' )*` with optional whitespace. Throws
/// std::invalid_argument on malformed text or on elements that are out of
/// range or repeated.
Permutation parse_cycles(std::string_view text, int n);

/// Canonical cycle notation, fixed points included: "(1,2)(3,4,5,6)(7)".
std::string format_cycles(const Permutation& w);
std::string format_cycles(const CycleDecomposition& d);

/// "{2:2, 3:1}", lengths ascending.
std::string format_cycle_type(const CycleType& t);

}  // namespace permsq
