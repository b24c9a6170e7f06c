#include "orelab/maxden.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "orelab/ideals.hpp"
#include "orelab/ring_io.hpp"

namespace orelab {

namespace {

Subset nonzero(const FiniteRing& r) {
  Subset s = r.full_subset();
  s.erase(r.zero());
  return s;
}

std::optional<Elem> first_nonzero(const FiniteRing& r, const Subset& s) {
  std::optional<Elem> out;
  s.for_each([&](Elem e) {
    if (!out && e != r.zero()) out = e;
  });
  return out;
}

std::string describe(const Subset& s) { return s.to_string(); }

}  // namespace

std::vector<SaturatedSet> saturated_denominator_sets(const FiniteRing& r, const Limits& limits) {
  std::vector<SaturatedSet> out;
  for (const auto& a : two_sided_ideals(r, limits)) {
    if (a.size() == r.order()) continue;
    const Quotient q = quotient(r, a);
    MulSet candidate(r, q.projection.preimage(units(q.ring)));
    if (is_left_denominator(candidate) && ass(candidate) == a) out.push_back({a, std::move(candidate)});
  }
  return out;
}

std::vector<MulSet> all_multiplicative_sets(const FiniteRing& r, const Limits& limits) {
  require_order("multiplicative set enumeration", r.order(), limits.max_brute_force_order);
  const auto n = static_cast<Elem>(r.order());
  // Every multiplicative set is reached from {1} by adjoining one element at a time.
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> queue;
  const Subset start = Subset::of(n, {r.one()});
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const Subset cur = std::move(queue.front());
    queue.pop_front();
    for (Elem x = 0; x < n; ++x) {
      if (x == r.zero() || cur.contains(x)) continue;
      Subset gens = cur;
      gens.insert(x);
      try {
        MulSet next = mul_closure(r, gens);
        if (seen.insert(next.elements()).second) queue.push_back(next.elements());
      } catch (const ZeroAbsorbed&) {
      }
    }
  }
  std::vector<Subset> sorted(seen.begin(), seen.end());
  sort_canonical(sorted);
  std::vector<MulSet> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.emplace_back(r, std::move(s));
  return out;
}

std::vector<MulSet> brute_force_denominator_sets(const FiniteRing& r, const Limits& limits) {
  std::vector<MulSet> out;
  for (auto& s : all_multiplicative_sets(r, limits))
    if (is_left_denominator(s)) out.push_back(std::move(s));
  return out;
}

std::vector<MulSet> max_den_l(const std::vector<SaturatedSet>& saturated) {
  std::vector<MulSet> out;
  std::vector<Subset> by_set, by_ass;
  for (const auto& s : saturated) {
    bool maximal = true;
    for (const auto& t : saturated)
      if (t.set.elements() != s.set.elements() && s.set.elements().subset_of(t.set.elements())) maximal = false;
    if (maximal) {
      out.push_back(s.set);
      by_set.push_back(s.ideal);
    }
    bool ass_maximal = true;
    for (const auto& t : saturated)
      if (t.ideal != s.ideal && s.ideal.subset_of(t.ideal)) ass_maximal = false;
    if (ass_maximal) by_ass.push_back(s.ideal);
  }
  if (by_set != by_ass)
    throw InternalInconsistency("inclusion-maximal denominator sets disagree with maximal elements of Ass_l");
  if (out.empty()) throw InternalInconsistency("maxDen_l is empty");
  return out;
}

std::vector<MulSet> max_den_l(const FiniteRing& r, const Limits& limits) {
  return max_den_l(saturated_denominator_sets(r, limits));
}

Subset left_localization_radical(const FiniteRing& r, const Limits& limits) {
  Subset rad = r.full_subset();
  for (const auto& s : max_den_l(r, limits)) rad &= ass(s);
  return rad;
}

LocalizabilityVerdict is_left_localizable(const LocalizationProfile& p, const Limits& limits) {
  const FiniteRing& r = p.ring;
  const std::size_t n = p.max_den.size();
  LocalizabilityVerdict v;

  v.definitional.ran = true;
  v.definitional.holds = p.localizable == nonzero(r);
  v.definitional.detail = "CL_l = " + describe(p.localizable);

  v.radical_and_division.ran = true;
  std::size_t division = 0;
  for (const auto& fr : p.localizations) division += is_division_ring(fr.ring) ? 1 : 0;
  v.radical_and_division.holds = p.radical.size() == 1 && division == n;
  v.radical_and_division.detail = "|ll_R| = " + std::to_string(p.radical.size()) + ", " + std::to_string(division) +
                                  " of " + std::to_string(n) + " maximal localizations are division rings";

  try {
    const bool semiprime = is_semiprime(r, limits);
    const std::size_t udim = uniform_dimension(r, limits);
    const std::size_t mins = minimal_primes(r, limits).size();
    v.semiprime_goldie.ran = true;
    v.semiprime_goldie.holds = semiprime && udim == mins && mins == n;
    v.semiprime_goldie.detail = std::string(semiprime ? "semiprime" : "not semiprime") +
                                ", udim = " + std::to_string(udim) + ", |Min| = " + std::to_string(mins) +
                                ", |maxDen_l| = " + std::to_string(n);
  } catch (const SizeGuardExceeded& e) {
    v.semiprime_goldie.detail = e.what();
  }

  {
    const LargestQuotient lq = largest_left_quotient(r);
    const CentralDecomposition dec = central_decomposition(lq.q.ring);
    std::size_t div = 0;
    for (const auto& f : dec.product.factors) div += is_division_ring(f) ? 1 : 0;
    v.quotient_product.ran = true;
    v.quotient_product.holds = div == dec.product.factors.size() && dec.product.factors.size() == n;
    v.quotient_product.detail = "Q_l(R) has " + std::to_string(dec.product.factors.size()) +
                                " indecomposable factors, " + std::to_string(div) + " of them division rings";
  }

  const RouteResult* routes[] = {&v.definitional, &v.radical_and_division, &v.semiprime_goldie, &v.quotient_product};
  for (const auto* route : routes) {
    if (!route->ran) {
      v.partial = true;
      continue;
    }
    if (route->holds != v.definitional.holds)
      throw InternalInconsistency("localizability routes disagree: " + v.definitional.detail + " vs " + route->detail);
  }
  v.localizable = v.definitional.holds;
  if (!v.localizable) v.witness = first_nonzero(r, p.non_localizable);
  return v;
}

LocalizabilityVerdict is_left_localizable(const FiniteRing& r, const Limits& limits) {
  return profile(r, limits).verdict;
}

namespace {

bool localization_maximal_from(const FiniteRing& r, const std::vector<SaturatedSet>& saturated) {
  const LargestQuotient lq = largest_left_quotient(r);
  if (!lq.q.sigma.is_bijective()) throw InternalInconsistency("Q_l(R) differs from R for a finite ring");
  return saturated.size() == 1 && saturated.front().ideal.size() == 1;
}

}  // namespace

bool is_localization_maximal(const FiniteRing& r, const Limits& limits) {
  return localization_maximal_from(r, saturated_denominator_sets(r, limits));
}

DecompositionResult product_decomposition(const LocalizationProfile& p, const Limits& limits) {
  const FiniteRing& r = p.ring;
  const std::size_t n = p.max_den.size();
  DecompositionResult res;
  std::vector<Subset> a;
  for (const auto& s : p.max_den) a.push_back(ass(s));

  res.conditions.push_back({"maxDen_l(R) = {S_1..S_" + std::to_string(n) + "}", true});

  const bool radical_zero = p.radical.size() == 1;
  res.conditions.push_back({"ll_R = 0", radical_zero});
  if (!radical_zero && res.failed_condition == 0) {
    res.failed_condition = 2;
    res.reason = "left localization radical " + describe(p.radical) + " is nonzero";
    res.witness = {*first_nonzero(r, p.radical)};
  }

  bool comaximal = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Subset sum = ideal_sum(r, a[i], a[j]);
      if (sum.size() == r.order()) continue;
      if (comaximal && res.failed_condition == 0) {
        res.failed_condition = 3;
        res.reason = "ass(S_" + std::to_string(i + 1) + ") + ass(S_" + std::to_string(j + 1) + ") != R";
        res.witness = {sum.complement().elements().front()};
      }
      comaximal = false;
    }
  res.conditions.push_back({"ass(S_i) + ass(S_j) = R for i != j", comaximal});

  bool factors_maximal = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Quotient q = quotient(r, a[i]);
    if (is_localization_maximal(q.ring, limits)) continue;
    if (factors_maximal && res.failed_condition == 0) {
      res.failed_condition = 4;
      res.reason = "R/ass(S_" + std::to_string(i + 1) + ") is not left localization maximal";
      res.witness = {static_cast<Elem>(i + 1)};
    }
    factors_maximal = false;
  }
  res.conditions.push_back({"R/ass(S_i) left localization maximal", factors_maximal});

  res.success = res.failed_condition == 0;
  if (!res.success) return res;

  std::vector<FiniteRing> factors;
  for (const auto& fr : p.localizations) factors.push_back(fr.ring);
  Product prod = direct_product(factors);
  std::vector<Elem> table(r.order());
  std::vector<Elem> comps(n);
  for (Elem x = 0; x < r.order(); ++x) {
    for (std::size_t i = 0; i < n; ++i) comps[i] = p.localizations[i].sigma(x);
    table[x] = prod.combine(comps);
  }
  RingMap sigma = RingMap::make(r, prod.ring, std::move(table));
  if (!sigma.is_bijective()) throw InternalInconsistency("product of maximal localizations is not an isomorphism");

  Decomposition dec{factors, prod, sigma, {}, {}};
  bool a_ok = true, c_ok = true, d_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fr = p.localizations[i];
    dec.quotient_isomorphisms.push_back(quotient_model_isomorphism(fr));
    a_ok = a_ok && fr.sigma.is_surjective() && fr.sigma.kernel() == a[i];
    const Subset unit_i = units(fr.ring);
    c_ok = c_ok && fr.sigma.preimage(unit_i) == p.max_den[i].elements() &&
           fr.sigma.image_of(p.max_den[i].elements()) == unit_i;
    d_ok = d_ok && sigma.preimage(prod.lift(i, fr.ring.zero_ideal())) == a[i];
  }
  dec.conclusions = {{"(a) r -> r/1 is onto S_i^-1 R with kernel ass(S_i)", a_ok},
                     {"(b) R -> prod S_i^-1 R is an isomorphism", sigma.is_bijective()},
                     {"(c) S_i = sigma_i^-1(R_i*) and sigma_i(S_i) = R_i*", c_ok},
                     {"(d) ass(S_i) = R_1 x .. x 0 x .. x R_n", d_ok}};
  res.decomposition = std::move(dec);
  return res;
}

LocalizationProfile profile(const FiniteRing& r, const Limits& limits) {
  LocalizationProfile p{r, canonical_hash(r), units(r), {}, {}, {}, {}, {}, {}, {}, {}, {}, false, {}};
  p.saturated = saturated_denominator_sets(r, limits);
  for (const auto& s : p.saturated) p.ass_l.push_back(s.ideal);
  p.max_den = max_den_l(p.saturated);

  p.radical = r.full_subset();
  p.localizable = r.empty_subset();
  p.completely = r.full_subset();
  Subset product_kernel = r.full_subset();
  for (const auto& s : p.max_den) {
    p.localizations.push_back(build_fraction_ring(r, s));
    p.radical &= ass(s);
    p.localizable |= s.elements();
    p.completely &= s.elements();
    product_kernel &= p.localizations.back().sigma.kernel();
  }
  p.non_localizable = p.localizable.complement();
  if (product_kernel != p.radical)
    throw InternalInconsistency("ll_R differs from the kernel of R -> prod S^-1 R");
  if (!p.radical.subset_of(p.non_localizable))
    throw InternalInconsistency("ll_R meets the left localizable elements");

  p.verdict = is_left_localizable(p, limits);
  p.localization_maximal = localization_maximal_from(r, p.saturated);
  p.decomposition = product_decomposition(p, limits);
  return p;
}

SidedProfiles sided_profiles(const FiniteRing& r, const Limits& limits) {
  const FiniteRing op = opposite(r);
  SidedProfiles sp{profile(r, limits), profile(op, limits), {}, {}, {}, false, false};
  sp.left_right_localizable = sp.left.localizable & sp.right.localizable;

  std::vector<MulSet> two_sided;
  for (const auto& a : two_sided_ideals(r, limits)) {
    if (a.size() == r.order()) continue;
    const Quotient q = quotient(r, a);
    const Subset candidate = q.projection.preimage(units(q.ring));
    MulSet left(r, candidate), right(op, candidate);
    if (is_left_denominator(left) && ass(left) == a && is_left_denominator(right) && ass(right) == a)
      two_sided.push_back(left);
  }
  sp.two_sided_localizable = r.empty_subset();
  for (const auto& s : two_sided) {
    bool maximal = true;
    for (const auto& t : two_sided)
      if (t.elements() != s.elements() && s.elements().subset_of(t.elements())) maximal = false;
    if (maximal) sp.two_sided_max.push_back(s);
    sp.two_sided_localizable |= s.elements();
  }
  if (!sp.two_sided_localizable.subset_of(sp.left_right_localizable))
    throw InternalInconsistency("CL(R) is not contained in CL_{l,r}(R)");
  sp.left_right_localizable_ring = sp.left_right_localizable == nonzero(r);
  sp.two_sided_localizable_ring = sp.two_sided_localizable == nonzero(r);
  return sp;
}

}  // namespace orelab
