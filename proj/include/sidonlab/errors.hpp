#pragma once

#include <stdexcept>
#include <string>

namespace sidonlab {

// Thrown when a mathematically guaranteed invariant fails at runtime: a
// violated theorem-backed inequality, a construction postcondition, or a
// disagreement between two independent computations of the same quantity.
// Callers should treat it as "the library or its input data is broken",
// not as a recoverable condition.
class FatalInconsistency : public std::runtime_error {
 public:
  explicit FatalInconsistency(const std::string& what_arg)
      : std::runtime_error("fatal inconsistency: " + what_arg) {}
};

}  // namespace sidonlab
