#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permsq/census.hpp"
#include "permsq/classify.hpp"
#include "permsq/count.hpp"
#include "permsq/permutation.hpp"

namespace permsq {

/// Upper bound on n for exhaustive enumeration.
struct EnumerationLimits {
  static constexpr int kDefaultCap = 9;
  static constexpr int kExtendedCap = 10;
  static constexpr const char* kEnvVar = "PERMSQ_ENUM_CAP";

  int cap = kDefaultCap;

  static EnumerationLimits extended() { return {kExtendedCap}; }
  /// kDefaultCap, or the integer in PERMSQ_ENUM_CAP when it is set.
  static EnumerationLimits from_env();

  /// Throws std::out_of_range when n is outside [1, cap].
  void check(int n, const std::string& what) const;
};

std::uint64_t factorial_u64(int n);

/// Position of w in the lexicographic order of one-line forms, from 0.
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

/// Calls `visit` on every permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationLimits& limits = EnumerationLimits::extended());

/// Same, restricted to lexicographic ranks in [first, last).
void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> all_permutations(int n, const EnumerationLimits& limits = EnumerationLimits::extended());

/// Ground truth for S_n, indexed by lexicographic rank: the class label of
/// every permutation and whether it equals u * u for some u in S_n. Squares
/// are found by squaring every element, not by the cycle-type criterion.
class GroupTable {
 public:
  GroupTable(int n, const EnumerationLimits& limits = {}, int workers = 1);

  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return static_cast<std::uint64_t>(labels_.size()); }

  ClassLabel label(std::uint64_t rank) const;
  bool is_square(std::uint64_t rank) const { return squares_[rank] != 0; }
  /// Bit x-1 is set iff x lies in an odd cycle.
  std::uint32_t odd_support_mask(std::uint64_t rank) const { return odd_masks_[rank]; }
  bool matches(std::uint64_t rank, const ClassSelector& sel) const;

  std::uint64_t count(const ClassSelector& sel) const;
  std::uint64_t square_count() const;

 private:
  int n_;
  std::vector<std::uint8_t> labels_;  // label_index of each permutation
  std::vector<std::uint8_t> squares_;
  std::vector<std::uint32_t> odd_masks_;
};

/// Process-wide memoized GroupTable for S_n. The limits are checked on every
/// call; tables are built once and never evicted.
const GroupTable& shared_group_table(int n, const EnumerationLimits& limits = {});

/// Bitmask form of a point set, bit x-1 for point x.
std::uint32_t support_mask(const OddSupport& a);

/// |{u * u : u in S_n}|.
Count brute_alpha(int n, const EnumerationLimits& limits = {}, int workers = 1);

/// Census by exhaustive enumeration; same schema as census().
CensusReport brute_census(int n, const EnumerationLimits& limits = {}, int workers = 1);

struct DBijectionVerdict {
  ClassSelector selector;
  int source_size = 0;          // m = 2n
  std::uint64_t sources = 0;    // |class_m|
  std::uint64_t images = 0;     // (m+1) |class_m|
  std::uint64_t distinct = 0;
  std::uint64_t outside_target = 0;
  std::uint64_t inverse_failures = 0;
  std::uint64_t target = 0;     // |class_{m+1}|

  bool pass() const {
    return distinct == images && outside_target == 0 && inverse_failures == 0 && images == target;
  }
};

/// Checks that add_and_swap maps class_m x [m+1] bijectively onto
/// class_{m+1}. Supported classes: EE1, PS1, OE1, OE2 (the others contain
/// permutations with 1-cycles). m must be even and m+1 within the limits.
DBijectionVerdict verify_d_bijection(const ClassSelector& selector, int m, const EnumerationLimits& limits = {});

/// All A in [2n+1] with |A| = 2c+1 and 1 <= c <= n-1, in lexicographic order.
std::vector<OddSupport> admissible_supports(int n);

struct Equation2Verdict {
  int n = 0;
  OddSupport support;     // A in [2n+1]
  Point removed = 0;      // a
  OddSupport relabeled;   // A \ {a} transported into [2n]
  Count factor;           // |A|
  Count lhs_ee, rhs_ee;
  Count lhs_ps, rhs_ps;

  bool pass() const { return lhs_ee == rhs_ee && lhs_ps == rhs_ps; }
};

/// #{eta in EE^(3)_{2n+1} : A_eta = A} = |A| #{eta in EE^(3)_{2n} : A_eta = B}
/// where B is A \ {a} carried into [2n] by the order-preserving relabeling of
/// [2n+1] \ {a}; same for the perfect squares of type 3.
Equation2Verdict verify_equation2(int n, const OddSupport& support, Point removed,
                                  const EnumerationLimits& limits = {});

struct Lemma41Verdict {
  int n = 0;
  OddSupport support;
  std::uint64_t class_count = 0;    // |EE^(3):A_{2n+1}|
  std::uint64_t product_count = 0;  // |EE^(1)_{2n-2c}| |EE^(2)_{2c+1}|
  std::uint64_t ps_class_count = 0;
  std::uint64_t ps_product_count = 0;  // |PS^(1)_{2n-2c}| |EE^(2)_{2c+1}|
  std::uint64_t collisions = 0;        // split images hit twice
  std::uint64_t outside_product = 0;   // split parts in the wrong class
  std::uint64_t round_trip_failures = 0;
  std::uint64_t ps_mismatches = 0;     // eta PS but even part not, or vice versa

  bool pass() const {
    return class_count == product_count && ps_class_count == ps_product_count && collisions == 0 &&
           outside_product == 0 && round_trip_failures == 0 && ps_mismatches == 0;
  }
};

Lemma41Verdict verify_lemma41(int n, const OddSupport& support, const EnumerationLimits& limits = {});

}  // namespace permsq
