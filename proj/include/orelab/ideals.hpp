#pragma once

#include <span>
#include <vector>

#include "orelab/limits.hpp"
#include "orelab/ring.hpp"

namespace orelab {

enum class Side { left, right, two_sided };

/// The additive subgroup generated by `gens`.
Subset additive_closure(const FiniteRing& r, const Subset& gens);

/// Smallest additive subgroup containing `gens` and closed under the requested
/// multiplications (R·x for left, x·R for right, R·x·R for two-sided).
Subset ideal_closure(const FiniteRing& r, std::span<const Elem> gens, Side side);
Subset ideal_closure(const FiniteRing& r, const Subset& gens, Side side);

bool is_ideal(const FiniteRing& r, const Subset& a, Side side);

/// a + b for additive subgroups.
Subset ideal_sum(const FiniteRing& r, const Subset& a, const Subset& b);
/// The additive span of all products xy, x ∈ a, y ∈ b.
Subset ideal_product(const FiniteRing& r, const Subset& a, const Subset& b);

/// All ideals of the requested side in canonical order (size, then lexicographic).
/// Guarded by `limit` on the ring order.
std::vector<Subset> ideals(const FiniteRing& r, Side side, std::size_t limit);
std::vector<Subset> two_sided_ideals(const FiniteRing& r, const Limits& limits = {});
std::vector<Subset> left_ideals(const FiniteRing& r, const Limits& limits = {});

/// R/a with cosets numbered by their smallest element.
struct Quotient {
  FiniteRing ring;
  RingMap projection;
  /// Smallest element of each coset.
  std::vector<Elem> representative;
};

/// Throws NotAnIdeal unless `a` is a two-sided ideal and ImproperIdeal if a = R.
Quotient quotient(const FiniteRing& r, const Subset& a);

/// P proper and aRb ⊄ P for all a, b ∉ P.
bool is_prime_ideal(const FiniteRing& r, const Subset& p);
std::vector<Subset> minimal_primes(const FiniteRing& r, const Limits& limits = {});

/// The intersection of the minimal primes is zero. Cross-checked against the
/// absence of nonzero square-zero ideals; disagreement raises InternalInconsistency.
bool is_semiprime(const FiniteRing& r, const Limits& limits = {});

/// Maximal number of nonzero left ideals whose sum is direct.
std::size_t uniform_dimension(const FiniteRing& r, const Limits& limits = {});

}  // namespace orelab
