#pragma once

#include <span>
#include <vector>

#include "orelab/ring.hpp"

namespace orelab {

/// R_1 × ... × R_k with componentwise tables. Elements are numbered in
/// mixed radix with the first factor most significant.
struct Product {
  FiniteRing ring;
  std::vector<FiniteRing> factors;
  std::vector<RingMap> projections;

  Elem combine(std::span<const Elem> components) const;
  std::vector<Elem> components(Elem e) const;
  /// x in slot i, zero elsewhere (additive, not unital).
  Elem embed(std::size_t i, Elem x) const;
  /// R_1 × ... × s_i × ... × R_k.
  Subset lift(std::size_t i, const Subset& s) const;
  /// 0 × ... × s_i × ... × 0.
  Subset lift_with_zeros(std::size_t i, const Subset& s) const;
  /// s_1 × ... × s_k.
  Subset box(const std::vector<Subset>& per_factor) const;
};

Product direct_product(std::vector<FiniteRing> factors);

/// Decomposition of R along its primitive central idempotents e_1..e_k into
/// indecomposable rings e_i R.
struct CentralDecomposition {
  std::vector<Elem> idempotents;
  Product product;
  /// r ↦ (e_1 r, ..., e_k r), verified to be an isomorphism.
  RingMap to_product;
  /// For each factor, its carrier as elements of R (factor index j ↦ element of R).
  std::vector<std::vector<Elem>> carriers;
};

std::vector<Elem> central_idempotents(const FiniteRing& r);
CentralDecomposition central_decomposition(const FiniteRing& r);

}  // namespace orelab
