#pragma once

// Naive reference computations straight from the definitions. They read the
// ring tables only and never call library algorithms, so they can serve as
// independent oracles for the tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "orelab/ring.hpp"

namespace oracle {

using orelab::Elem;
using orelab::FiniteRing;
using ESet = std::vector<Elem>;  // sorted, no duplicates

inline ESet sorted(ESet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool has(const ESet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); }

inline ESet all(const FiniteRing& r) {
  ESet out(r.order());
  for (Elem i = 0; i < r.order(); ++i) out[i] = i;
  return out;
}

inline ESet minus(const ESet& a, const ESet& b) {
  ESet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ESet meet(const ESet& a, const ESet& b) {
  ESet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ESet join(const ESet& a, const ESet& b) {
  ESet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool within(const ESet& a, const ESet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline ESet units(const FiniteRing& r) {
  ESet out;
  for (Elem u = 0; u < r.order(); ++u)
    for (Elem v = 0; v < r.order(); ++v)
      if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) {
        out.push_back(u);
        break;
      }
  return out;
}

/// {x : s x = 0}
inline ESet ker(const FiniteRing& r, Elem s) {
  ESet out;
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(s, x) == r.zero()) out.push_back(x);
  return out;
}

/// x -> cx and x -> xc both injective
inline ESet regular(const FiniteRing& r) {
  ESet out;
  for (Elem c = 0; c < r.order(); ++c) {
    bool ok = true;
    for (Elem x = 0; x < r.order() && ok; ++x)
      if (x != r.zero() && (r.mul(c, x) == r.zero() || r.mul(x, c) == r.zero())) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

inline bool is_multiplicative(const FiniteRing& r, const ESet& s) {
  if (!oracle::has(s, r.one()) || oracle::has(s, r.zero())) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!oracle::has(s, r.mul(a, b))) return false;
  return true;
}

/// {x : s x = 0 for some s in S}
inline ESet ass(const FiniteRing& r, const ESet& s) {
  ESet out;
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem t : s)
      if (r.mul(t, x) == r.zero()) {
        out.push_back(x);
        break;
      }
  return out;
}

/// For all x in R, s in S there are t in S, y in R with t x = y s.
inline bool is_left_ore(const FiniteRing& r, const ESet& s) {
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem a : s) {
      ESet rs;  // R a
      for (Elem y = 0; y < r.order(); ++y) rs.push_back(r.mul(y, a));
      rs = oracle::sorted(rs);
      bool found = false;
      for (Elem t : s)
        if (oracle::has(rs, r.mul(t, x))) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

/// x s = 0 for some s in S implies t x = 0 for some t in S.
inline bool is_left_reversible(const FiniteRing& r, const ESet& s) {
  for (Elem x = 0; x < r.order(); ++x) {
    bool right_killed = false, left_killed = false;
    for (Elem a : s) {
      if (r.mul(x, a) == r.zero()) right_killed = true;
      if (r.mul(a, x) == r.zero()) left_killed = true;
    }
    if (right_killed && !left_killed) return false;
  }
  return true;
}

inline bool is_left_denominator(const FiniteRing& r, const ESet& s) {
  return oracle::is_left_ore(r, s) && oracle::is_left_reversible(r, s);
}

/// x is invertible modulo the additive subgroup a: xy - 1, yx - 1 in a for some y.
inline bool unit_modulo(const FiniteRing& r, const ESet& a, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (oracle::has(a, r.sub(r.mul(x, y), r.one())) && oracle::has(a, r.sub(r.mul(y, x), r.one()))) return true;
  return false;
}

/// Elements mapping to units of R/ass(S).
inline ESet saturation(const FiniteRing& r, const ESet& s) {
  const ESet a = oracle::ass(r, s);
  ESet out;
  for (Elem x = 0; x < r.order(); ++x)
    if (oracle::unit_modulo(r, a, x)) out.push_back(x);
  return out;
}

/// Core: {s in S : ker(s.) = ass(S)}.
inline ESet core(const FiniteRing& r, const ESet& s) {
  const ESet a = oracle::ass(r, s);
  ESet out;
  for (Elem t : s)
    if (oracle::ker(r, t) == a) out.push_back(t);
  return out;
}

/// Elements of S whose kernel is inclusion-maximal among the kernels of S.
inline ESet max_kernel(const FiniteRing& r, const ESet& s) {
  std::vector<ESet> kers;
  for (Elem t : s) kers.push_back(oracle::ker(r, t));
  ESet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < s.size() && maximal; ++j)
      if (kers[j] != kers[i] && oracle::within(kers[i], kers[j])) maximal = false;
    if (maximal) out.push_back(s[i]);
  }
  return out;
}

/// Every multiplicative set, by scanning the subsets that contain 1 and not 0.
inline std::vector<ESet> all_multiplicative_sets(const FiniteRing& r) {
  const std::size_t n = r.order();
  if (n > 20) throw std::invalid_argument("oracle subset scan limited to order 20");
  std::vector<Elem> free;
  for (Elem e = 0; e < n; ++e)
    if (e != r.zero() && e != r.one()) free.push_back(e);
  std::vector<ESet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << free.size()); ++mask) {
    ESet s{r.one()};
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask >> b & 1u) s.push_back(free[b]);
    s = oracle::sorted(s);
    if (oracle::is_multiplicative(r, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ESet> all_denominator_sets(const FiniteRing& r) {
  std::vector<ESet> out;
  for (auto& s : oracle::all_multiplicative_sets(r))
    if (oracle::is_left_denominator(r, s)) out.push_back(s);
  return out;
}

/// Inclusion-maximal members of a family.
inline std::vector<ESet> maximal(const std::vector<ESet>& family) {
  std::set<ESet> out;
  for (const auto& s : family) {
    bool top = true;
    for (const auto& t : family)
      if (t != s && oracle::within(s, t)) top = false;
    if (top) out.insert(s);
  }
  return {out.begin(), out.end()};
}

inline std::vector<ESet> max_den(const FiniteRing& r) { return oracle::maximal(oracle::all_denominator_sets(r)); }

inline bool is_commutative(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

inline bool is_reduced(const FiniteRing& r) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    Elem p = x;
    for (std::size_t k = 0; k <= r.order(); ++k) {
      p = r.mul(p, x);
      if (p == r.zero()) return false;
    }
  }
  return true;
}

/// A finite ring is a product of finite fields iff it is commutative and has
/// no nonzero nilpotents.
inline bool is_product_of_fields(const FiniteRing& r) { return oracle::is_commutative(r) && oracle::is_reduced(r); }

inline bool is_division_ring(const FiniteRing& r) { return oracle::units(r).size() + 1 == r.order(); }

inline std::vector<Elem> central_idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem e = 0; e < r.order(); ++e) {
    if (r.mul(e, e) != e) continue;
    bool central = true;
    for (Elem x = 0; x < r.order() && central; ++x) central = r.mul(e, x) == r.mul(x, e);
    if (central) out.push_back(e);
  }
  return out;
}

/// Nonzero central idempotents with no nonzero central idempotent strictly below.
inline std::vector<Elem> primitive_central_idempotents(const FiniteRing& r) {
  const auto ce = oracle::central_idempotents(r);
  std::vector<Elem> out;
  for (Elem e : ce) {
    if (e == r.zero()) continue;
    bool primitive = true;
    for (Elem f : ce)
      if (f != r.zero() && f != e && r.mul(f, e) == f) primitive = false;
    if (primitive) out.push_back(e);
  }
  return out;
}

/// The ring eR for a central idempotent e, relabeled onto {0..|eR|-1}.
inline FiniteRing corner(const FiniteRing& r, Elem e) {
  ESet carrier;
  for (Elem x = 0; x < r.order(); ++x) carrier.push_back(r.mul(e, x));
  carrier = oracle::sorted(carrier);
  std::map<Elem, Elem> index;
  for (Elem i = 0; i < carrier.size(); ++i) index[carrier[i]] = i;
  const std::size_t m = carrier.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = index.at(r.add(carrier[i], carrier[j]));
      mul[i * m + j] = index.at(r.mul(carrier[i], carrier[j]));
    }
  return FiniteRing::from_tables(m, std::move(add), std::move(mul), index.at(r.zero()), index.at(e));
}

/// Multiplicative closure of a few generators, or empty if it reaches zero.
inline ESet closure(const FiniteRing& r, const ESet& gens) {
  ESet s{r.one()};
  for (bool grew = true; grew;) {
    grew = false;
    ESet next = s;
    for (Elem a : s)
      for (Elem g : gens) next.push_back(r.mul(a, g));
    next = oracle::sorted(next);
    if (oracle::has(next, r.zero())) return {};
    grew = next.size() != s.size();
    s = std::move(next);
  }
  return s;
}

/// Ass_l(R) = {0}. Up to order 20 every denominator set is scanned. Above
/// that, a denominator set with nonzero ass among the sets generated by at
/// most two elements refutes it; if none exists the question is left open
/// and std::domain_error is thrown.
inline bool is_localization_maximal(const FiniteRing& r) {
  if (r.order() <= 20) {
    for (const auto& s : oracle::all_denominator_sets(r))
      if (oracle::ass(r, s) != ESet{r.zero()}) return false;
    return true;
  }
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = a; b < r.order(); ++b) {
      const ESet s = oracle::closure(r, oracle::sorted({a, b}));
      if (!s.empty() && oracle::ass(r, s) != ESet{r.zero()} && oracle::is_left_denominator(r, s)) return false;
    }
  throw std::domain_error("oracle cannot decide localization maximality above order 20");
}

/// Product of the central factors, each localization maximal.
inline bool is_product_of_localization_maximal(const FiniteRing& r) {
  for (Elem e : oracle::primitive_central_idempotents(r))
    if (!oracle::is_localization_maximal(oracle::corner(r, e))) return false;
  return true;
}

inline std::size_t count_primitive_central_idempotents(const FiniteRing& r) {
  return oracle::primitive_central_idempotents(r).size();
}

}  // namespace oracle
