#include "orelab/ring.hpp"

#include <utility>

namespace orelab {

namespace {

void check_shape(std::size_t n, const std::vector<Elem>& table, const char* which) {
  if (table.size() != n * n)
    throw AxiomViolation(std::string(which) + " table is not " + std::to_string(n) + "x" + std::to_string(n), {});
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw AxiomViolation(std::string(which) + " table entry out of range",
                           {static_cast<Elem>(i / n), static_cast<Elem>(i % n)});
}

}  // namespace

FiniteRing FiniteRing::from_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                                   std::vector<std::string> names) {
  if (n == 0) throw AxiomViolation("nonempty carrier", {});
  check_shape(n, add, "add");
  check_shape(n, mul, "mul");
  if (zero >= n || one >= n) throw AxiomViolation("zero and one inside carrier", {zero, one});
  if (zero == one) throw AxiomViolation("zero != one", {zero, one});
  if (!names.empty() && names.size() != n) throw AxiomViolation("one name per element", {});

  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };
  const auto N = static_cast<Elem>(n);

  for (Elem a = 0; a < N; ++a) {
    if (A(zero, a) != a || A(a, zero) != a) throw AxiomViolation("additive identity", {a});
    for (Elem b = 0; b < N; ++b)
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive commutativity", {a, b});
  }
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b)
      for (Elem c = 0; c < N; ++c)
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("additive associativity", {a, b, c});

  std::vector<Elem> neg(n, N);
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b)
      if (A(a, b) == zero) {
        neg[a] = b;
        break;
      }
    if (neg[a] == N) throw AxiomViolation("additive inverse", {a});
  }

  for (Elem a = 0; a < N; ++a)
    if (M(one, a) != a || M(a, one) != a) throw AxiomViolation("multiplicative identity", {a});
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b) {
      const Elem ab = M(a, b);
      for (Elem c = 0; c < N; ++c)
        if (M(ab, c) != M(a, M(b, c))) throw AxiomViolation("multiplicative associativity", {a, b, c});
    }
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b)
      for (Elem c = 0; c < N; ++c) {
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw AxiomViolation("left distributivity", {a, b, c});
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) throw AxiomViolation("right distributivity", {a, b, c});
      }

  auto d = std::make_shared<Data>();
  d->order = n;
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->neg = std::move(neg);
  d->zero = zero;
  d->one = one;
  d->names = std::move(names);
  return FiniteRing(std::move(d));
}

FiniteRing FiniteRing::from_tables(const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul,
                                   Elem zero, Elem one, std::vector<std::string> names) {
  const std::size_t n = add.size();
  std::vector<Elem> fa, fm;
  fa.reserve(n * n);
  fm.reserve(n * n);
  for (const auto& row : add) {
    if (row.size() != n) throw AxiomViolation("add table is not square", {});
    fa.insert(fa.end(), row.begin(), row.end());
  }
  if (mul.size() != n) throw AxiomViolation("mul table is not square", {});
  for (const auto& row : mul) {
    if (row.size() != n) throw AxiomViolation("mul table is not square", {});
    fm.insert(fm.end(), row.begin(), row.end());
  }
  return from_tables(n, std::move(fa), std::move(fm), zero, one, std::move(names));
}

std::string FiniteRing::label(Elem e) const {
  if (!d_->names.empty()) return d_->names[e];
  return std::to_string(e);
}

bool FiniteRing::is_commutative() const noexcept {
  const auto n = static_cast<Elem>(order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  if (d_ == other.d_) return true;
  return d_->order == other.d_->order && d_->zero == other.d_->zero && d_->one == other.d_->one &&
         d_->add == other.d_->add && d_->mul == other.d_->mul;
}

Subset FiniteRing::left_mult_kernel(Elem a) const {
  Subset k(order());
  for (Elem r = 0; r < order(); ++r)
    if (mul(a, r) == zero()) k.insert(r);
  return k;
}

Subset FiniteRing::right_mult_kernel(Elem a) const {
  Subset k(order());
  for (Elem r = 0; r < order(); ++r)
    if (mul(r, a) == zero()) k.insert(r);
  return k;
}

RingMap RingMap::make(FiniteRing source, FiniteRing target, std::vector<Elem> table) {
  const auto n = static_cast<Elem>(source.order());
  if (table.size() != n) throw AxiomViolation("homomorphism table size", {});
  for (Elem a = 0; a < n; ++a)
    if (table[a] >= target.order()) throw AxiomViolation("homomorphism image outside target", {a});
  if (table[source.one()] != target.one()) throw AxiomViolation("homomorphism preserves one", {source.one()});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (table[source.add(a, b)] != target.add(table[a], table[b]))
        throw AxiomViolation("homomorphism is additive", {a, b});
      if (table[source.mul(a, b)] != target.mul(table[a], table[b]))
        throw AxiomViolation("homomorphism is multiplicative", {a, b});
    }
  return RingMap(std::move(source), std::move(target), std::move(table));
}

RingMap RingMap::identity(const FiniteRing& ring) {
  std::vector<Elem> t(ring.order());
  for (Elem i = 0; i < t.size(); ++i) t[i] = i;
  return RingMap(ring, ring, std::move(t));
}

Subset RingMap::kernel() const {
  Subset k(source_.order());
  for (Elem a = 0; a < table_.size(); ++a)
    if (table_[a] == target_.zero()) k.insert(a);
  return k;
}

Subset RingMap::image() const {
  Subset im(target_.order());
  for (Elem v : table_) im.insert(v);
  return im;
}

Subset RingMap::preimage(const Subset& target_subset) const {
  Subset pre(source_.order());
  for (Elem a = 0; a < table_.size(); ++a)
    if (target_subset.contains(table_[a])) pre.insert(a);
  return pre;
}

Subset RingMap::image_of(const Subset& source_subset) const {
  Subset im(target_.order());
  source_subset.for_each([&](Elem a) { im.insert(table_[a]); });
  return im;
}

bool RingMap::is_injective() const { return kernel().size() == 1; }

bool RingMap::is_surjective() const { return image().size() == target_.order(); }

RingMap RingMap::then(const RingMap& after) const {
  if (!after.source_.same_tables(target_)) throw Error("cannot compose ring maps: target/source mismatch");
  std::vector<Elem> t(table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = after.table_[table_[i]];
  return RingMap(source_, after.target_, std::move(t));
}

bool hom_is_R_isomorphism(const RingMap& phi) { return phi.is_bijective(); }

bool hom_is_R_isomorphism(const RingMap& phi, const RingMap& source_canonical, const RingMap& target_canonical) {
  if (!phi.is_bijective()) return false;
  if (!source_canonical.target().same_tables(phi.source()) || !target_canonical.target().same_tables(phi.target()))
    return false;
  if (!source_canonical.source().same_tables(target_canonical.source())) return false;
  for (Elem r = 0; r < source_canonical.source().order(); ++r)
    if (phi(source_canonical(r)) != target_canonical(r)) return false;
  return true;
}

std::optional<Elem> inverse(const FiniteRing& r, Elem u) {
  for (Elem v = 0; v < r.order(); ++v)
    if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) return v;
  return std::nullopt;
}

Subset units(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem u = 0; u < r.order(); ++u)
    if (inverse(r, u)) out.insert(u);
  return out;
}

Subset regular_elements(const FiniteRing& r) {
  Subset out(r.order());
  for (Elem c = 0; c < r.order(); ++c)
    if (r.left_mult_kernel(c).size() == 1 && r.right_mult_kernel(c).size() == 1) out.insert(c);
  return out;
}

bool is_division_ring(const FiniteRing& r) { return units(r).size() + 1 == r.order(); }

FiniteRing opposite(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Elem> add(r.add_table().begin(), r.add_table().end());
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = r.mul(b, a);
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), r.zero(), r.one(), r.names());
}

}  // namespace orelab
