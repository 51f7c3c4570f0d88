#pragma once

#include <stdexcept>

namespace cycode {

/// An enumeration would exceed the configured cap on group elements,
/// codewords, subcodes, or action points.
class enumeration_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A power substitution v -> t^(c/d) hit an exponent not divisible by d.
/// The substitution theorems guarantee divisibility, so this signals a
/// hypothesis mismatch (wrong ring) or an implementation bug.
class divisibility_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cycode
