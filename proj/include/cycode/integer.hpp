#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycode {

/// Exact arbitrary-precision integer used for polynomial coefficients,
/// cardinalities, and counting checks.
using Integer = boost::multiprecision::cpp_int;

/// base^exp by binary exponentiation; exp is an ordinary machine integer.
inline Integer ipow(Integer base, std::uint64_t exp) {
  Integer r = 1;
  while (exp != 0) {
    if (exp & 1) r *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return r;
}

}  // namespace cycode
