#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orelab/oresets.hpp"

namespace orelab {

/// The left localization S⁻¹R realized as an explicit finite ring.
struct FractionRing {
  FiniteRing base;
  MulSet dens;
  FiniteRing ring;
  /// r ↦ r/1
  RingMap sigma;
  /// For each element of `ring`, the (s, r) with meaning s⁻¹r that is minimal
  /// in (index(s), index(r)) order among all pairs of its class.
  std::vector<std::pair<Elem, Elem>> reps;

  /// Class of s⁻¹r. Requires s ∈ dens.
  Elem fraction(Elem s, Elem r) const { return class_of[position[s] * base.order() + r]; }

  std::vector<Elem> position;  // index of each denominator in dens order
  std::vector<Elem> class_of;  // pair (position(s), r) ↦ class
};

struct FractionOptions {
  /// At or below this order, well-definedness of + and · is checked over every
  /// witness and representative, and the pair equivalence is re-derived from
  /// its definition by exhaustive scan.
  std::size_t exhaustive_order = 8;
  /// Above it, this many random representative/witness choices per pair of classes.
  std::size_t samples = 4;
  std::uint64_t seed = 0x5eed;
};

/// Builds S⁻¹R by the Ore calculus on pairs (s, r). Throws NotDenominator, and
/// InternalInconsistency if a witness choice changes any result.
FractionRing build_fraction_ring(const FiniteRing& r, const MulSet& s, const FractionOptions& opts = {});

/// θ : R/ass(S) → S⁻¹R, π(r) ↦ σ(r), verified to be an R-isomorphism.
RingMap quotient_model_isomorphism(const FractionRing& fr);

/// For f : R → T inverting every element of S, the induced s⁻¹r ↦ f(s)⁻¹f(r).
RingMap induced_map(const FractionRing& fr, const RingMap& f);

/// S_0 and Q_l(R) = S_0⁻¹R. On a finite ring the regular elements are the
/// units and form a left denominator set, so S_0 = C_R = R* and the classical
/// left quotient ring exists and equals Q_l(R).
struct LargestQuotient {
  MulSet s0;
  FractionRing q;
  /// Q_{l,cl}(R) = C_R⁻¹R exists (and is Q_l(R)).
  bool classical_exists = true;
};

LargestQuotient largest_left_quotient(const FiniteRing& r);

}  // namespace orelab
