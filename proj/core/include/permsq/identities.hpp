#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsq/census.hpp"

namespace permsq {

/// Counting identities between S_{2n} and S_{2n+1} (or within S_n).
enum class Identity {
  theorem1,    // |EE^(i)_{2n+1}| = (2n+1) |EE^(i)_{2n}|, i = 1..3
  theorem2,    // |PS^(i)_{2n+1}| = (2n+1) |PS^(i)_{2n}|, i = 1..3
  corollary,   // alpha(2n+1) = (2n+1) alpha(2n)
  lemma31,     // |EE_n| = |OE_n|, n > 1
  lemma32,     // |EE_{2n+1}| = (2n+1) |EE_{2n}|
  remark31,    // |OE_{2n+1}| = (2n+1) |OE_{2n}|
  oe_types,    // |OE^(i)_{2n+1}| = (2n+1) |OE^(i)_{2n}|, i = 1..3
  ps2_eq_ee2,  // |PS^(2)_n| = |EE^(2)_n|
};

const std::vector<Identity>& all_identities();
std::string identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

/// Smallest admissible n.
int identity_min_n(Identity id);

/// Group sizes whose census the identity reads at parameter n.
std::vector<int> identity_sizes(Identity id, int n);

struct IdentityVerdict {
  Identity identity;
  int n = 0;
  std::vector<IdentityCheck> checks;

  bool pass() const;
};

/// Supplies the census for a given group size.
using CensusSource = std::function<CensusReport(int)>;

/// Memoizes a CensusSource by n. Not thread-safe.
class CachedCensus {
 public:
  explicit CachedCensus(CensusSource source) : source_(std::move(source)) {}
  const CensusReport& operator()(int n);

 private:
  CensusSource source_;
  std::map<int, CensusReport> cache_;
};

/// Throws std::invalid_argument if n is below identity_min_n(id).
IdentityVerdict verify_identity(Identity id, int n, CachedCensus& census);

/// Partition backend.
IdentityVerdict verify_identity(Identity id, int n);

}  // namespace permsq
