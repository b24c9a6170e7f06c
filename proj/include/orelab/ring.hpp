#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/subset.hpp"

namespace orelab {

/// A unital ring on the carrier {0..n-1}, given by full addition and
/// multiplication tables. Immutable; copies share the tables.
class FiniteRing {
 public:
  /// Validates every ring axiom by table scan. Tables are row-major n*n.
  ///
  /// Throws AxiomViolation naming the first failing law and its witness
  /// elements. The trivial ring (zero == one) is rejected.
  static FiniteRing from_tables(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                                std::vector<std::string> names = {});
  static FiniteRing from_tables(const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul,
                                Elem zero, Elem one, std::vector<std::string> names = {});

  std::size_t order() const noexcept { return d_->order; }
  Elem zero() const noexcept { return d_->zero; }
  Elem one() const noexcept { return d_->one; }

  Elem add(Elem a, Elem b) const noexcept { return d_->add[a * d_->order + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return d_->mul[a * d_->order + b]; }
  Elem neg(Elem a) const noexcept { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  std::span<const Elem> add_table() const noexcept { return d_->add; }
  std::span<const Elem> mul_table() const noexcept { return d_->mul; }
  const std::vector<std::string>& names() const noexcept { return d_->names; }
  /// The element's name if one was given, otherwise its index.
  std::string label(Elem e) const;

  bool is_commutative() const noexcept;
  /// Identical tables, zero and one. Names are ignored.
  bool same_tables(const FiniteRing& other) const noexcept;

  Subset empty_subset() const { return Subset(order()); }
  Subset full_subset() const { return Subset::full(order()); }
  Subset zero_ideal() const { return Subset::of(order(), {zero()}); }

  /// {r : a r = 0}, the kernel of left multiplication by a.
  Subset left_mult_kernel(Elem a) const;
  /// {r : r a = 0}.
  Subset right_mult_kernel(Elem a) const;

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> add, mul, neg;
    Elem zero = 0, one = 0;
    std::vector<std::string> names;
  };
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A unital ring homomorphism given by its table of images.
class RingMap {
 public:
  /// Throws AxiomViolation if the table is not additive, multiplicative and unital.
  static RingMap make(FiniteRing source, FiniteRing target, std::vector<Elem> table);
  static RingMap identity(const FiniteRing& ring);

  const FiniteRing& source() const noexcept { return source_; }
  const FiniteRing& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  Elem operator()(Elem e) const noexcept { return table_[e]; }

  Subset kernel() const;
  Subset image() const;
  /// Preimage of a subset of the target.
  Subset preimage(const Subset& target_subset) const;
  /// Image of a subset of the source.
  Subset image_of(const Subset& source_subset) const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// (after ∘ this)
  RingMap then(const RingMap& after) const;

 private:
  RingMap(FiniteRing s, FiniteRing t, std::vector<Elem> table)
      : source_(std::move(s)), target_(std::move(t)), table_(std::move(table)) {}
  FiniteRing source_;
  FiniteRing target_;
  std::vector<Elem> table_;
};

/// True iff phi is bijective.
bool hom_is_R_isomorphism(const RingMap& phi);
/// True iff phi is bijective and phi ∘ source_canonical = target_canonical, i.e.
/// phi fixes r/1 for every r of the common base ring.
bool hom_is_R_isomorphism(const RingMap& phi, const RingMap& source_canonical, const RingMap& target_canonical);

/// {u : uv = vu = 1 for some v}
Subset units(const FiniteRing& r);
/// {c : x -> cx and x -> xc are injective}
Subset regular_elements(const FiniteRing& r);
std::optional<Elem> inverse(const FiniteRing& r, Elem u);
/// Every nonzero element is a unit. Finite division rings are fields, but
/// commutativity is not assumed here.
bool is_division_ring(const FiniteRing& r);

/// Same carrier and addition, multiplication transposed.
FiniteRing opposite(const FiniteRing& r);

}  // namespace orelab
