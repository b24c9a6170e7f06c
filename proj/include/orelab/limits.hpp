#pragma once

#include <cstddef>

namespace orelab {

/// Bounds for the exponential routines. Exceeding one raises SizeGuardExceeded.
struct Limits {
  /// Largest ring order for constructors and two-sided ideal enumeration.
  std::size_t max_order = 256;
  /// Largest ring order for which all left ideals are enumerated (uniform dimension).
  std::size_t max_left_ideal_order = 64;
  /// Largest ring order for exhaustive denominator-set enumeration.
  std::size_t max_brute_force_order = 8;

  /// Defaults overridden by ORELAB_GUARD_ORDER and ORELAB_GUARD_BRUTEFORCE when set.
  static Limits from_environment();
};

void require_order(const char* routine, std::size_t order, std::size_t limit);

}  // namespace orelab
