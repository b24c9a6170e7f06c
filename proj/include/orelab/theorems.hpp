#pragma once

#include <string>
#include <vector>

#include "orelab/limits.hpp"
#include "orelab/oresets.hpp"

namespace orelab {

struct TheoremCheck {
  std::string theorem;
  std::string check;
  bool pass = false;
  std::string detail;
};

/// Every id accepted by verify_theorems, in suite order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

/// Runs the executable form of each listed theorem on `r`. Every id yields at
/// least one check. When a theorem's hypothesis does not hold for `r`, the
/// check records that (passing) and, where possible, the theorem is also run
/// on a ring built from `r` that does satisfy it.
///
/// Throws std::invalid_argument for unknown ids.
std::vector<TheoremCheck> verify_theorems(const FiniteRing& r, const std::vector<std::string>& ids,
                                          const Limits& limits = {});

/// The test family for set-level laws: every multiplicative set when the
/// order is within the brute-force guard, otherwise {1}, the units, the
/// saturated sets and every cyclic closure not reaching zero.
std::vector<MulSet> multiplicative_family(const FiniteRing& r, const Limits& limits = {});

}  // namespace orelab
