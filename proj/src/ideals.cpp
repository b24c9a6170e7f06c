#include "orelab/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace orelab {

namespace {

/// An additive subgroup under construction.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const FiniteRing& r) : r_(r), members_(r.order()) {
    members_.insert(r.zero());
    list_.push_back(r.zero());
  }
  SubgroupBuilder(const FiniteRing& r, const Subset& subgroup) : r_(r), members_(subgroup), list_(subgroup.elements()) {}

  void add(Elem g) {
    if (members_.contains(g)) return;
    // H + <g> is the union of the cosets H + kg up to the first kg landing in H.
    const Subset base_members = members_;
    const std::vector<Elem> base = list_;
    for (Elem m = g; !base_members.contains(m); m = r_.add(m, g))
      for (Elem x : base) {
        const Elem y = r_.add(x, m);
        members_.insert(y);
        list_.push_back(y);
      }
  }

  const Subset& members() const { return members_; }
  const std::vector<Elem>& list() const { return list_; }

 private:
  const FiniteRing& r_;
  Subset members_;
  std::vector<Elem> list_;
};

void add_multiples(const FiniteRing& r, SubgroupBuilder& b, Elem g, Side side) {
  const auto n = static_cast<Elem>(r.order());
  switch (side) {
    case Side::left:
      for (Elem x = 0; x < n; ++x) b.add(r.mul(x, g));
      break;
    case Side::right:
      for (Elem x = 0; x < n; ++x) b.add(r.mul(g, x));
      break;
    case Side::two_sided:
      for (Elem x = 0; x < n; ++x) {
        const Elem xg = r.mul(x, g);
        for (Elem y = 0; y < n; ++y) b.add(r.mul(xg, y));
      }
      break;
  }
}

}  // namespace

Subset additive_closure(const FiniteRing& r, const Subset& gens) {
  SubgroupBuilder b(r);
  gens.for_each([&](Elem g) { b.add(g); });
  return b.members();
}

Subset ideal_closure(const FiniteRing& r, std::span<const Elem> gens, Side side) {
  SubgroupBuilder b(r);
  for (Elem g : gens) {
    if (g >= r.order()) throw Error("generator " + std::to_string(g) + " outside carrier");
    add_multiples(r, b, g, side);
  }
  return b.members();
}

Subset ideal_closure(const FiniteRing& r, const Subset& gens, Side side) {
  const auto e = gens.elements();
  return ideal_closure(r, e, side);
}

bool is_ideal(const FiniteRing& r, const Subset& a, Side side) {
  if (a.universe() != r.order() || !a.contains(r.zero())) return false;
  const auto elems = a.elements();
  for (Elem x : elems)
    for (Elem y : elems)
      if (!a.contains(r.sub(x, y))) return false;
  const auto n = static_cast<Elem>(r.order());
  for (Elem x : elems)
    for (Elem t = 0; t < n; ++t) {
      if (side != Side::right && !a.contains(r.mul(t, x))) return false;
      if (side != Side::left && !a.contains(r.mul(x, t))) return false;
    }
  return true;
}

Subset ideal_sum(const FiniteRing& r, const Subset& a, const Subset& b) { return additive_closure(r, a | b); }

Subset ideal_product(const FiniteRing& r, const Subset& a, const Subset& b) {
  SubgroupBuilder out(r);
  a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.add(r.mul(x, y)); }); });
  return out.members();
}

std::vector<Subset> ideals(const FiniteRing& r, Side side, std::size_t limit) {
  require_order("ideal enumeration", r.order(), limit);
  const auto n = static_cast<Elem>(r.order());

  std::vector<std::vector<Elem>> principal(n);
  for (Elem x = 0; x < n; ++x) {
    SubgroupBuilder b(r);
    add_multiples(r, b, x, side);
    principal[x] = b.list();
  }

  // Every ideal is reached from {0} by adjoining one principal ideal at a time.
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> queue;
  seen.insert(r.zero_ideal());
  queue.push_back(r.zero_ideal());
  while (!queue.empty()) {
    Subset cur = std::move(queue.front());
    queue.pop_front();
    for (Elem x = 0; x < n; ++x) {
      if (cur.contains(x)) continue;
      SubgroupBuilder b(r, cur);
      for (Elem y : principal[x]) b.add(y);
      if (seen.insert(b.members()).second) queue.push_back(b.members());
    }
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<Subset> two_sided_ideals(const FiniteRing& r, const Limits& limits) {
  return ideals(r, Side::two_sided, limits.max_order);
}

std::vector<Subset> left_ideals(const FiniteRing& r, const Limits& limits) {
  return ideals(r, Side::left, limits.max_left_ideal_order);
}

Quotient quotient(const FiniteRing& r, const Subset& a) {
  if (!is_ideal(r, a, Side::two_sided)) throw NotAnIdeal("subset " + a.to_string() + " is not a two-sided ideal");
  if (a.size() == r.order()) throw ImproperIdeal("cannot form the quotient by the whole ring");

  const auto n = static_cast<Elem>(r.order());
  const auto members = a.elements();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset(n, unset);
  std::vector<Elem> rep;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != unset) continue;
    const auto k = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem m : members) coset[r.add(x, m)] = k;
  }
  const std::size_t q = rep.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = coset[r.add(rep[i], rep[j])];
      mul[i * q + j] = coset[r.mul(rep[i], rep[j])];
    }
  auto ring = FiniteRing::from_tables(q, std::move(add), std::move(mul), coset[r.zero()], coset[r.one()]);
  auto proj = RingMap::make(r, ring, coset);
  return Quotient{std::move(ring), std::move(proj), std::move(rep)};
}

bool is_prime_ideal(const FiniteRing& r, const Subset& p) {
  if (p.size() == r.order()) return false;
  const auto outside = p.complement().elements();
  const auto n = static_cast<Elem>(r.order());
  for (Elem a : outside)
    for (Elem b : outside) {
      bool escapes = false;
      for (Elem t = 0; t < n && !escapes; ++t) escapes = !p.contains(r.mul(r.mul(a, t), b));
      if (!escapes) return false;
    }
  return true;
}

std::vector<Subset> minimal_primes(const FiniteRing& r, const Limits& limits) {
  std::vector<Subset> primes;
  for (const auto& i : two_sided_ideals(r, limits))
    if (is_prime_ideal(r, i)) primes.push_back(i);
  std::vector<Subset> minimal;
  for (const auto& p : primes) {
    bool is_min = true;
    for (const auto& q : primes)
      if (q != p && q.subset_of(p)) is_min = false;
    if (is_min) minimal.push_back(p);
  }
  sort_canonical(minimal);
  return minimal;
}

bool is_semiprime(const FiniteRing& r, const Limits& limits) {
  Subset meet = r.full_subset();
  for (const auto& p : minimal_primes(r, limits)) meet &= p;
  const bool by_primes = meet.size() == 1;

  bool by_nilpotent = true;
  for (const auto& i : two_sided_ideals(r, limits)) {
    if (i.size() == 1) continue;
    if (ideal_product(r, i, i).size() == 1) {
      by_nilpotent = false;
      break;
    }
  }
  if (by_primes != by_nilpotent)
    throw InternalInconsistency("semiprime tests disagree: prime radical vs square-zero ideals");
  return by_primes;
}

std::size_t uniform_dimension(const FiniteRing& r, const Limits& limits) {
  const auto all = left_ideals(r, limits);
  std::vector<Subset> minimal;
  for (const auto& l : all) {
    if (l.size() == 1) continue;
    bool is_min = true;
    for (const auto& m : all)
      if (m.size() > 1 && m != l && m.subset_of(l)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(l);
  }
  // Every nonzero left ideal contains a minimal one, and a maximal independent
  // family of simple submodules spans the socle, so greedy selection is optimal.
  Subset sum = r.zero_ideal();
  std::size_t k = 0;
  for (const auto& l : minimal) {
    if ((l & sum).size() == 1) {
      sum = ideal_sum(r, sum, l);
      ++k;
    }
  }
  return k;
}

}  // namespace orelab
