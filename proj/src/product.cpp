#include "orelab/product.hpp"

#include <algorithm>

namespace orelab {

Elem Product::combine(std::span<const Elem> comps) const {
  Elem e = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) e = e * static_cast<Elem>(factors[i].order()) + comps[i];
  return e;
}

std::vector<Elem> Product::components(Elem e) const {
  std::vector<Elem> out(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    const auto n = static_cast<Elem>(factors[i].order());
    out[i] = e % n;
    e /= n;
  }
  return out;
}

Elem Product::embed(std::size_t i, Elem x) const {
  std::vector<Elem> comps(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) comps[j] = factors[j].zero();
  comps[i] = x;
  return combine(comps);
}

Subset Product::lift(std::size_t i, const Subset& s) const { return projections[i].preimage(s); }

Subset Product::lift_with_zeros(std::size_t i, const Subset& s) const {
  std::vector<Subset> parts;
  for (std::size_t j = 0; j < factors.size(); ++j) parts.push_back(j == i ? s : factors[j].zero_ideal());
  return box(parts);
}

Subset Product::box(const std::vector<Subset>& per_factor) const {
  Subset out(ring.order());
  for (Elem e = 0; e < ring.order(); ++e) {
    const auto c = components(e);
    bool in = true;
    for (std::size_t i = 0; i < c.size() && in; ++i) in = per_factor[i].contains(c[i]);
    if (in) out.insert(e);
  }
  return out;
}

Product direct_product(std::vector<FiniteRing> factors) {
  if (factors.empty()) throw Error("direct product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();

  Product p{factors.front(), std::move(factors), {}};
  const auto k = p.factors.size();
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::vector<Elem>> comps(n);
  for (Elem e = 0; e < n; ++e) comps[e] = p.components(e);
  std::vector<Elem> tmp(k);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = p.factors[i].add(comps[a][i], comps[b][i]);
      add[a * n + b] = p.combine(tmp);
      for (std::size_t i = 0; i < k; ++i) tmp[i] = p.factors[i].mul(comps[a][i], comps[b][i]);
      mul[a * n + b] = p.combine(tmp);
    }
  for (std::size_t i = 0; i < k; ++i) tmp[i] = p.factors[i].zero();
  const Elem zero = p.combine(tmp);
  for (std::size_t i = 0; i < k; ++i) tmp[i] = p.factors[i].one();
  const Elem one = p.combine(tmp);

  std::vector<std::string> names;
  const bool named = std::all_of(p.factors.begin(), p.factors.end(), [](const auto& f) { return !f.names().empty(); });
  if (named && k > 1) {
    names.reserve(n);
    for (Elem e = 0; e < n; ++e) {
      std::string s = "(";
      for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + p.factors[i].label(comps[e][i]);
      names.push_back(s + ")");
    }
  } else if (named) {
    names = p.factors.front().names();
  }

  p.ring = FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one, std::move(names));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> t(n);
    for (Elem e = 0; e < n; ++e) t[e] = comps[e][i];
    p.projections.push_back(RingMap::make(p.ring, p.factors[i], std::move(t)));
  }
  return p;
}

std::vector<Elem> central_idempotents(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.order());
  std::vector<Elem> out;
  for (Elem e = 0; e < n; ++e) {
    if (r.mul(e, e) != e) continue;
    bool central = true;
    for (Elem x = 0; x < n && central; ++x) central = r.mul(e, x) == r.mul(x, e);
    if (central) out.push_back(e);
  }
  return out;
}

CentralDecomposition central_decomposition(const FiniteRing& r) {
  const auto idem = central_idempotents(r);
  // f ≤ e iff fe = f; primitive = minimal nonzero.
  std::vector<Elem> primitive;
  for (Elem e : idem) {
    if (e == r.zero()) continue;
    bool minimal = true;
    for (Elem f : idem)
      if (f != r.zero() && f != e && r.mul(f, e) == f) minimal = false;
    if (minimal) primitive.push_back(e);
  }

  std::vector<FiniteRing> factors;
  std::vector<std::vector<Elem>> carriers;
  std::vector<std::vector<Elem>> index_in_factor;
  const auto n = static_cast<Elem>(r.order());
  for (Elem e : primitive) {
    Subset carrier(n);
    for (Elem x = 0; x < n; ++x) carrier.insert(r.mul(e, x));
    auto elems = carrier.elements();
    std::vector<Elem> idx(n, 0);
    for (Elem j = 0; j < elems.size(); ++j) idx[elems[j]] = j;
    const std::size_t m = elems.size();
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        add[a * m + b] = idx[r.add(elems[a], elems[b])];
        mul[a * m + b] = idx[r.mul(elems[a], elems[b])];
      }
    std::vector<std::string> names;
    if (!r.names().empty())
      for (Elem x : elems) names.push_back(r.label(x));
    factors.push_back(FiniteRing::from_tables(m, std::move(add), std::move(mul), idx[r.zero()], idx[e], std::move(names)));
    carriers.push_back(std::move(elems));
    index_in_factor.push_back(std::move(idx));
  }

  Product prod = direct_product(factors);
  std::vector<Elem> table(n);
  std::vector<Elem> comps(primitive.size());
  for (Elem x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < primitive.size(); ++i) comps[i] = index_in_factor[i][r.mul(primitive[i], x)];
    table[x] = prod.combine(comps);
  }
  auto map = RingMap::make(r, prod.ring, std::move(table));
  if (!map.is_bijective()) throw InternalInconsistency("central idempotent decomposition is not an isomorphism");
  return CentralDecomposition{std::move(primitive), std::move(prod), std::move(map), std::move(carriers)};
}

}  // namespace orelab
