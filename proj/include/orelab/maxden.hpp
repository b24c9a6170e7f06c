#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orelab/limits.hpp"
#include "orelab/localize.hpp"
#include "orelab/product.hpp"

namespace orelab {

/// The largest left denominator set S_a with ass(S_a) = a.
struct SaturatedSet {
  Subset ideal;
  MulSet set;
};

/// For each proper two-sided ideal a, T_a = π_a⁻¹(units(R/a)) is kept iff it is
/// a left denominator set with ass(T_a) = a. The result is exactly the family
/// of saturated left denominator sets, in canonical ideal order.
std::vector<SaturatedSet> saturated_denominator_sets(const FiniteRing& r, const Limits& limits = {});

/// Every left denominator set, by exhaustive enumeration of multiplicative
/// sets. Guarded by limits.max_brute_force_order.
std::vector<MulSet> brute_force_denominator_sets(const FiniteRing& r, const Limits& limits = {});

/// Every multiplicative set (used by the oracle and by property checks).
std::vector<MulSet> all_multiplicative_sets(const FiniteRing& r, const Limits& limits = {});

/// Inclusion-maximal saturated sets, ordered by ass size then lexicographically.
/// Cross-checked against the maximal elements of Ass_l(R).
std::vector<MulSet> max_den_l(const std::vector<SaturatedSet>& saturated);
std::vector<MulSet> max_den_l(const FiniteRing& r, const Limits& limits = {});

/// ∩ ass(S) over maxDen_l(R).
Subset left_localization_radical(const FiniteRing& r, const Limits& limits = {});

struct RouteResult {
  bool ran = false;
  bool holds = false;
  std::string detail;
};

struct LocalizabilityVerdict {
  bool localizable = false;
  /// Some route could not run under the configured guards.
  bool partial = false;
  /// CL_l(R) = R∖{0}
  RouteResult definitional;
  /// ll_R = 0 and every maximal localization is a division ring
  RouteResult radical_and_division;
  /// semiprime with udim(R) = |Min(R)| = |maxDen_l(R)|
  RouteResult semiprime_goldie;
  /// Q_l(R) is a product of |maxDen_l(R)| division rings
  RouteResult quotient_product;
  /// Smallest nonzero left non-localizable element, when not localizable.
  std::optional<Elem> witness;
};

struct NamedCheck {
  std::string name;
  bool holds = false;
};

/// R ≅ ∏ S_i⁻¹R with the identifications of the product characterization.
struct Decomposition {
  std::vector<FiniteRing> factors;
  Product product;
  /// r ↦ (r/1, ..., r/1), an isomorphism onto the product.
  RingMap sigma;
  /// R/ass(S_i) → S_i⁻¹R
  std::vector<RingMap> quotient_isomorphisms;
  std::vector<NamedCheck> conclusions;
};

struct DecompositionResult {
  bool success = false;
  /// Conditions 1..4: maxDen_l finite, ll_R = 0, ass(S_i)+ass(S_j) = R, R/ass(S_i) localization maximal.
  std::vector<NamedCheck> conditions;
  /// 0 on success, otherwise the first failing condition number.
  int failed_condition = 0;
  std::string reason;
  std::vector<Elem> witness;
  std::optional<Decomposition> decomposition;
};

/// The full invariant bundle of a ring.
struct LocalizationProfile {
  FiniteRing ring;
  std::string ring_hash;
  Subset units;
  std::vector<Subset> ass_l;
  std::vector<SaturatedSet> saturated;
  std::vector<MulSet> max_den;
  /// S⁻¹R for each S in max_den, in the same order.
  std::vector<FractionRing> localizations;
  Subset radical;
  Subset localizable;
  Subset completely;
  Subset non_localizable;
  LocalizabilityVerdict verdict;
  bool localization_maximal = false;
  DecompositionResult decomposition;
};

LocalizationProfile profile(const FiniteRing& r, const Limits& limits = {});

/// Four routes, required to agree among those that ran. Disagreement raises
/// InternalInconsistency.
LocalizabilityVerdict is_left_localizable(const LocalizationProfile& p, const Limits& limits = {});
LocalizabilityVerdict is_left_localizable(const FiniteRing& r, const Limits& limits = {});

/// Q_l(R) = R and Ass_l(R) = {0}.
bool is_localization_maximal(const FiniteRing& r, const Limits& limits = {});

DecompositionResult product_decomposition(const LocalizationProfile& p, const Limits& limits = {});

struct SidedProfiles {
  LocalizationProfile left;
  /// The left profile of the opposite ring.
  LocalizationProfile right;
  /// CL_{l,r} = CL_l ∩ CL_r
  Subset left_right_localizable;
  /// Maximal (left and right) denominator sets.
  std::vector<MulSet> two_sided_max;
  /// CL(R): elements of some (left and right) denominator set.
  Subset two_sided_localizable;
  bool left_right_localizable_ring = false;
  bool two_sided_localizable_ring = false;
};

SidedProfiles sided_profiles(const FiniteRing& r, const Limits& limits = {});

}  // namespace orelab
