#pragma once

#include <stdexcept>

namespace eqk {

// A computed object violates a structural property that the underlying
// theory guarantees (support of structure constants, congruence forms that
// must agree, basis verification). Distinct from bad input.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eqk
