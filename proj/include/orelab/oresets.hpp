#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orelab/ring.hpp"

namespace orelab {

/// A multiplicative subset of a ring: contains one, excludes zero, closed under
/// multiplication.
class MulSet {
 public:
  /// Validates the three invariants; throws Error on failure.
  MulSet(FiniteRing ring, Subset elements);

  const FiniteRing& ring() const noexcept { return ring_; }
  const Subset& elements() const noexcept { return elements_; }
  bool contains(Elem e) const noexcept { return elements_.contains(e); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::vector<Elem> list() const { return elements_.elements(); }

  friend bool operator==(const MulSet& a, const MulSet& b) noexcept { return a.elements_ == b.elements_; }

 private:
  FiniteRing ring_;
  Subset elements_;
};

/// A pair (r, s) violating a condition.
using Witness = std::pair<Elem, Elem>;

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// Smallest multiplicative set containing `generators` and 1. Throws
/// ZeroAbsorbed with a product chain of generators if 0 is reached.
MulSet mul_closure(const FiniteRing& r, std::span<const Elem> generators);
MulSet mul_closure(const FiniteRing& r, const Subset& generators);

/// For every r ∈ R, s ∈ S: Sr ∩ Rs ≠ ∅. The witness is the first failing (r, s)
/// in index order.
Verdict is_left_ore(const MulSet& s);
/// Left Ore and left reversible (rs = 0 ⇒ tr = 0 for some t ∈ S).
Verdict is_left_denominator(const MulSet& s);

/// {r : sr = 0 for some s ∈ S}
Subset ass(const MulSet& s);
/// {r : rx = 0 for some x ∈ X}
Subset r_ass(const FiniteRing& r, const Subset& x);

/// {s ∈ S : ker(s·) = ass(S)}. Throws NotOre. May be empty in general.
Subset core(const MulSet& s);
/// Elements whose kernel ker(s·) is maximal among {ker(t·) : t ∈ S}.
Subset max_kernel_elements(const MulSet& s);

/// σ⁻¹(units of S⁻¹R) for a left denominator set S. Computed both as the
/// pullback of the units of R/ass(S) and via the fraction ring; the two must
/// agree. Throws NotDenominator.
MulSet saturate(const MulSet& s);

/// The multiplicative semigroup generated by S ∪ T. Throws ZeroAbsorbed.
MulSet semigroup_product(const MulSet& s, const MulSet& t);

enum class Sidedness { left_only, right_only, two_sided, neither };
const char* to_string(Sidedness s);

/// Left status on R, right status as the left status on the opposite ring.
Sidedness denominator_sidedness(const MulSet& s);

/// Everything known about one multiplicative set.
struct OreReport {
  MulSet set;
  Verdict left_ore;
  Verdict left_denominator;
  Subset ass;
  /// Empty when the set is not left Ore.
  Subset core;
  bool core_empty = true;
  std::optional<MulSet> saturation;
};

OreReport ore_report(const MulSet& s);

}  // namespace orelab
