#pragma once

#include <optional>

#include "permsq/permutation.hpp"

namespace permsq {

/// True iff every even cycle length occurs an even number of times. Odd
/// cycles never obstruct a square root.
bool is_perfect_square(const CycleType& t) noexcept;
bool is_perfect_square(const Permutation& w);

/// The k-fold power of a single cycle as a permutation of [n].
Permutation cycle_power(const Cycle& c, int k, int n);

/// A canonical u with u * u == w, or nullopt when w is not a perfect square.
///
/// An odd m-cycle c contributes c^((m+1)/2). Even cycles of equal length are
/// taken in order of their minimum element and paired consecutively; the pair
/// (a_1..a_m), (b_1..b_m) contributes (a_1, b_1, a_2, b_2, ..., a_m, b_m).
std::optional<Permutation> square_root(const Permutation& w);

}  // namespace permsq
