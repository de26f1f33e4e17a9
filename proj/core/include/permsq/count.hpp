#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permsq {

/// Arbitrary-precision nonnegative count.
using Count = boost::multiprecision::cpp_int;

/// n!, memoized. Thread-safe.
Count factorial(int n);

/// Binomial coefficient; 0 when k < 0 or k > n.
Count binomial(int n, int k);

}  // namespace permsq
