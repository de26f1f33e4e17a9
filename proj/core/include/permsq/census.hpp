#pragma once

#include <array>
#include <string>
#include <vector>

#include "permsq/classify.hpp"
#include "permsq/count.hpp"

namespace permsq {

/// One checked equality with both sides recorded.
struct IdentityCheck {
  std::string name;
  Count lhs;
  Count rhs;

  bool pass() const { return lhs == rhs; }

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

/// Per-label counts for S_n plus totals and the within-n consistency checks.
/// Both the partition backend and the enumeration backend fill the same
/// structure, so reports from the two compare with ==.
struct CensusReport {
  int n = 0;
  std::array<Count, 6> all{};  // indexed like all_labels()
  std::array<Count, 6> ps{};   // perfect squares within each label
  Count ee_total;
  Count oe_total;
  Count alpha;

  /// Filled by finalize_census().
  std::vector<IdentityCheck> verdicts;

  const Count& count(const ClassSelector& sel) const;
  Count total() const { return ee_total + oe_total; }
  bool all_pass() const;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Position of a label in all_labels().
std::size_t label_index(const ClassLabel& label);

/// Appends the within-n checks: type sums against the EE/OE totals,
/// |EE| + |OE| = n!, perfect squares only in EE and summing to alpha,
/// |PS^(2)| = |EE^(2)|, and |EE| = |OE| when n > 1.
void finalize_census(CensusReport& report);

/// Number of perfect-square permutations of S_n, summed over cycle types
/// whose even parts all have even multiplicity. alpha(1) = 1.
Count alpha(int n);

/// Partition-backed census of S_n. Partitions are split across `workers`
/// threads; the report does not depend on the worker count.
CensusReport census(int n, int workers = 1);

}  // namespace permsq
