#pragma once

#include <map>
#include <string>

namespace permsq::cli {

/// Published values of alpha(n) for 2 <= n <= 17 (OEIS A003483), stored as
/// decimal strings exactly as published.
const std::map<int, std::string>& reference_alpha();

}  // namespace permsq::cli
