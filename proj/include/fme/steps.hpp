#pragma once

#include <cstdint>

namespace fme {

// Per-invocation operation tally. A "step" is one modular multiplication.
struct StepCount {
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;
  std::uint64_t inversions = 0;

  StepCount& operator+=(const StepCount& o) {
    multiplications += o.multiplications;
    divisions += o.divisions;
    inversions += o.inversions;
    return *this;
  }
  friend bool operator==(const StepCount&, const StepCount&) = default;
};

}  // namespace fme
