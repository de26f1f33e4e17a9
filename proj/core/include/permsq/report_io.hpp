#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsq/census.hpp"
#include "permsq/identities.hpp"

namespace permsq {

/// Fixed CSV header shared by every census-like table.
inline constexpr std::string_view kCsvHeader = "n,label,count";

/// The labelled values of a census in output order: EE1..EE3, OE1..OE3,
/// PS1..PS3, OE1/PS..OE3/PS, EE, OE, alpha, total.
std::vector<std::pair<std::string, Count>> census_values(const CensusReport& r);

/// One "n,label,count" line per labelled value, each ending in '\n'.
std::string census_to_csv(const CensusReport& r);

/// Single-line JSON object:
/// {"n":4,"labels":{"EE1":"3",...},"verdicts":[{"name":..,"lhs":"..","rhs":"..","pass":true},...]}
/// Counts are decimal strings.
std::string census_to_json(const CensusReport& r);

/// Inverse of census_to_json. Throws std::invalid_argument on malformed input.
CensusReport census_from_json(std::string_view text);

/// {"identity":"theorem1","n":3,"pass":true,"checks":[{"name":"EE1","lhs":"..","rhs":".."},...]}
std::string verdict_to_json(const IdentityVerdict& v);

}  // namespace permsq
