#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsq/permutation.hpp"

namespace permsq {

/// EE: even number of even-length cycles. OE: odd number.
enum class Parity { EE, OE };

/// Parity class together with the three-way type index (1, 2 or 3). The type
/// rules depend on whether n is even or odd.
struct ClassLabel {
  Parity parity = Parity::EE;
  int type_index = 1;

  /// "EE1" .. "EE3", "OE1" .. "OE3".
  std::string to_string() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Parses "EE1".."OE3". Throws std::invalid_argument otherwise.
ClassLabel parse_label(std::string_view text);

/// Every label in the order EE1, EE2, EE3, OE1, OE2, OE3.
const std::vector<ClassLabel>& all_labels();

/// Elements that lie in odd-length cycles, ascending.
struct OddSupport {
  std::vector<Point> elements;

  int size() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(Point x) const;
  std::string to_string() const;  // "{5,6,7}"

  friend bool operator==(const OddSupport&, const OddSupport&) = default;
};

Parity parity_class(const CycleType& t) noexcept;
Parity parity_class(const Permutation& w);

/// Type within EE. Throws std::invalid_argument for an OE cycle type.
///
/// Even n: 1 = only even cycles, 2 = only odd cycles, 3 = both.
/// Odd n: 2 = only odd cycles, 1 = exactly one fixed point and every other
/// cycle even, 3 = everything else. The all-odd test runs first, so the
/// identity of S_1 is type 2.
int ee_type(const CycleType& t);

/// Type within OE. Throws std::invalid_argument for an EE cycle type.
///
/// Even n: 1 = only even cycles, 2 = no fixed point and not type 1,
/// 3 = at least one fixed point.
/// Odd n: 1 = exactly one fixed point and every other cycle even,
/// 2 = exactly one fixed point and not type 1, 3 = everything else.
int oe_type(const CycleType& t);

ClassLabel classify(const CycleType& t);
ClassLabel classify(const Permutation& w);

/// ee_type(t) for perfect-square cycle types, nullopt otherwise.
std::optional<int> ps_type(const CycleType& t);

OddSupport odd_support(const Permutation& w);

/// A counted family: one class label, optionally restricted to perfect
/// squares. Text forms: "EE1".."OE3" and "PS1".."PS3" (PS_i = EE_i n PS).
struct ClassSelector {
  ClassLabel label;
  bool perfect_squares_only = false;

  bool matches(const CycleType& t) const;
  std::string to_string() const;

  friend bool operator==(const ClassSelector&, const ClassSelector&) = default;
};

ClassSelector parse_selector(std::string_view text);

}  // namespace permsq
