#include "orelab/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "orelab/ideals.hpp"
#include "orelab/localize.hpp"
#include "orelab/maxden.hpp"
#include "orelab/product.hpp"

namespace orelab {

namespace {

using Family = std::vector<Subset>;

Family sorted(Family f) {
  sort_canonical(f);
  return f;
}

bool same_family(const Family& a, const Family& b) { return sorted(a) == sorted(b); }

std::string family_string(const Family& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i].to_string();
  return out + "}";
}

Family elements_of(const std::vector<MulSet>& sets) {
  Family out;
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

Subset nonzero(const FiniteRing& r) {
  Subset s = r.full_subset();
  s.erase(r.zero());
  return s;
}

Subset inverses(const FiniteRing& r, const Subset& units_subset) {
  Subset out = r.empty_subset();
  units_subset.for_each([&](Elem u) {
    if (auto v = inverse(r, u)) out.insert(*v);
  });
  return out;
}

// {σ(s)⁻¹σ(t) : s, t ∈ S}
Subset left_fractions(const RingMap& sigma, const Subset& s) {
  const FiniteRing& a = sigma.target();
  Subset out = a.empty_subset();
  s.for_each([&](Elem x) {
    const auto inv = inverse(a, sigma(x));
    if (!inv) return;
    s.for_each([&](Elem y) { out.insert(a.mul(*inv, sigma(y))); });
  });
  return out;
}

// Intersection of all ideals in `a` except index `skip`.
Subset meet_except(const FiniteRing& r, const Family& a, std::size_t skip) {
  Subset m = r.full_subset();
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != skip) m &= a[j];
  return m;
}

bool tuple_map_injective(const FiniteRing& r, const std::vector<const RingMap*>& maps) {
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < r.order(); ++x) {
    std::vector<Elem> t;
    for (const auto* m : maps) t.push_back((*m)(x));
    if (!seen.insert(std::move(t)).second) return false;
  }
  return true;
}

std::optional<std::size_t> find_set(const std::vector<MulSet>& family, const Subset& s) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family[i].elements() == s) return i;
  return std::nullopt;
}

// Cores and the sets C_i' omit 1 once ass is nonzero; adjoining 1 changes
// neither the Ore calculus nor ass.
MulSet with_one(const FiniteRing& r, Subset s) {
  s.insert(r.one());
  return MulSet(r, std::move(s));
}

bool all_division(const std::vector<FiniteRing>& rings) {
  return std::all_of(rings.begin(), rings.end(), [](const FiniteRing& x) { return is_division_ring(x); });
}

// Accumulates a universally quantified check: counts instances and keeps the
// first counterexample.
struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  std::string detail() const {
    std::string d = std::to_string(instances) + " instance" + (instances == 1 ? "" : "s");
    if (failures) d += ", " + std::to_string(failures) + " failing; first: " + first;
    return d;
  }
  bool pass() const { return failures == 0; }
};

class Suite {
 public:
  Suite(const FiniteRing& r, const Limits& limits) : r_(r), limits_(limits) {}

  std::vector<TheoremCheck> out;

  void run(const std::string& id) {
    id_ = id;
    const std::size_t before = out.size();
    if (id == "4Jul10") quotient_laws();
    else if (id == "1a27Nov12") semigroup_products();
    else if (id == "d4Jan13") inclusion_by_ass();
    else if (id == "b27Nov12") maximal_ass();
    else if (id == "21Nov10") maximality_criterion();
    else if (id == "b11Dec12") unit_pullback();
    else if (id == "a27Nov12") radical_disjoint();
    else if (id == "c26Dec12") product_family();
    else if (id == "25Nov12") maximal_products();
    else if (id == "a29Nov12") maximal_products_localizable("every nonzero element left localizable iff all factors are division rings");
    else if (id == "27Nov12") decomposition();
    else if (id == "8Feb13") localizable_products();
    else if (id == "a1Dec12") radical_of_localizable();
    else if (id == "15Nov10") maximal_localizations();
    else if (id == "d1Dec12") division_dichotomy();
    else if (id == "29Nov12") localizable_characterization();
    else if (id == "e1Dec12") core_intersections();
    else if (id == "A3Dec12") regular_sum_set();
    else if (id == "D2Dec12") division_embedding();
    else if (id == "3Dec12") goldie_characterization();
    else if (id == "A8Dec12") quotient_bijection();
    else if (id == "C3Dec12") regular_set_bijection();
    else if (id == "B3Dec12") regular_set_product();
    else if (id == "a4Dec12") semiprime_case();
    else if (id == "b2Dec12") core_absorbs();
    else if (id == "A2Dec12") core_localization();
    else if (id == "a2Dec12") ass_as_union();
    else if (id == "B2Dec12") core_is_max();
    else if (id == "C2Dec12") core_formula();
    else throw std::invalid_argument("unknown theorem id '" + id + "'");
    if (out.size() == before) throw InternalInconsistency("theorem " + id + " executed no checks");
  }

 private:
  FiniteRing r_;
  Limits limits_;
  std::string id_;
  std::optional<LocalizationProfile> profile_;
  std::optional<std::vector<MulSet>> muls_, ores_, dens_;
  std::optional<CentralDecomposition> central_;
  std::optional<std::vector<bool>> central_maximal_;

  void add(std::string check, bool pass, std::string detail = {}) {
    out.push_back({id_, std::move(check), pass, std::move(detail)});
  }
  void add(std::string check, const Tally& t) { add(std::move(check), t.pass(), t.detail()); }
  void not_applicable(const std::string& hypothesis) { add("hypothesis not met: " + hypothesis, true, "no instance"); }

  const LocalizationProfile& prof() {
    if (!profile_) profile_ = profile(r_, limits_);
    return *profile_;
  }
  std::size_t n() { return prof().max_den.size(); }
  Family ass_list() {
    Family a;
    for (const auto& s : prof().max_den) a.push_back(ass(s));
    return a;
  }
  bool localizable() { return prof().localizable == nonzero(r_); }

  const std::vector<MulSet>& muls() {
    if (!muls_) muls_ = multiplicative_family(r_, limits_);
    return *muls_;
  }
  const std::vector<MulSet>& ores() {
    if (!ores_) {
      ores_.emplace();
      for (const auto& s : muls())
        if (is_left_ore(s)) ores_->push_back(s);
    }
    return *ores_;
  }
  const std::vector<MulSet>& dens() {
    if (!dens_) {
      dens_.emplace();
      for (const auto& s : ores())
        if (is_left_denominator(s)) dens_->push_back(s);
    }
    return *dens_;
  }
  const CentralDecomposition& central() {
    if (!central_) central_ = central_decomposition(r_);
    return *central_;
  }
  bool central_factors_maximal() {
    if (!central_maximal_) {
      central_maximal_.emplace();
      for (const auto& f : central().product.factors) central_maximal_->push_back(is_localization_maximal(f, limits_));
    }
    return std::all_of(central_maximal_->begin(), central_maximal_->end(), [](bool b) { return b; });
  }

  // ∏ S⁻¹R over maxDen_l(R): a product of left localization maximal rings.
  std::optional<Product> localization_product() {
    std::size_t order = 1;
    std::vector<FiniteRing> factors;
    for (const auto& fr : prof().localizations) {
      order *= fr.ring.order();
      factors.push_back(fr.ring);
    }
    if (order > limits_.max_order) {
      add("product of maximal localizations skipped", true,
          "order " + std::to_string(order) + " exceeds the order guard " + std::to_string(limits_.max_order));
      return std::nullopt;
    }
    return direct_product(std::move(factors));
  }

  std::optional<Product> with_field_factor() {
    if (2 * r_.order() > limits_.max_order) {
      add("R x F_2 skipped", true, "order exceeds the order guard");
      return std::nullopt;
    }
    const FiniteRing f2 = FiniteRing::from_tables(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1);
    return direct_product({r_, f2});
  }

  // --- Q_l laws -------------------------------------------------------------

  void quotient_laws() {
    const LargestQuotient lq = largest_left_quotient(r_);
    const FiniteRing& q = lq.q.ring;
    const RingMap& sigma = lq.q.sigma;
    const Subset q_units = units(q);
    const LargestQuotient lqq = largest_left_quotient(q);
    add("S_0(Q_l(R)) = Q_l(R)*", lqq.s0.elements() == q_units, "|Q_l(R)*| = " + std::to_string(q_units.size()));
    add("S_0(Q_l(R)) meets R in S_0(R)", sigma.preimage(lqq.s0.elements()) == lq.s0.elements());
    const Subset image = sigma.image_of(lq.s0.elements());
    const Subset generated = mul_closure(q, image | inverses(q, image)).elements();
    add("Q_l(R)* is generated by S_0(R) and its inverses", generated == q_units);
    add("Q_l(R)* = {s^-1 t : s,t in S_0(R)}", left_fractions(sigma, lq.s0.elements()) == q_units);
    add("Q_l(Q_l(R)) = Q_l(R)", lqq.q.sigma.is_bijective() && lqq.q.ring.order() == q.order());
    add("S_0(R) = units(R)", lq.s0.elements() == units(r_) && regular_elements(r_) == units(r_));
  }

  // --- products of denominator sets -----------------------------------------

  void semigroup_products() {
    Tally rass, den;
    for (const auto& s : dens())
      for (const auto& t : dens()) {
        const Subset a = ass(s), b = ass(t);
        if (!a.subset_of(b)) continue;
        const auto what = [&] { return "S=" + s.elements().to_string() + " T=" + t.elements().to_string(); };
        try {
          const MulSet st = semigroup_product(s, t);
          rass.record(r_ass(r_, st.elements()).subset_of(b), what);
          den.record(is_left_denominator(st).holds && b.subset_of(ass(st)), what);
        } catch (const ZeroAbsorbed&) {
          rass.record(false, what);
          den.record(false, what);
        }
      }
    add("r.ass(ST) is inside ass(T) when ass(S) is inside ass(T)", rass);
    add("ST is a left denominator set with ass(ST) containing ass(T)", den);
  }

  void inclusion_by_ass() {
    Tally t;
    for (const auto& s : prof().max_den)
      for (const auto& x : dens())
        t.record(x.elements().subset_of(s.elements()) == ass(x).subset_of(ass(s)),
                 [&] { return "S=" + s.elements().to_string() + " T=" + x.elements().to_string(); });
    add("for S maximal: T inside S iff ass(T) inside ass(S)", t);
  }

  void maximal_ass() {
    Family all = prof().ass_l;
    for (const auto& s : dens()) {
      const Subset a = ass(s);
      if (std::find(all.begin(), all.end(), a) == all.end()) all.push_back(a);
    }
    Family maximal;
    for (const auto& a : all) {
      bool top = true;
      for (const auto& b : all)
        if (a != b && a.subset_of(b)) top = false;
      if (top) maximal.push_back(a);
    }
    const Family from_max_den = ass_list();
    add("maximal elements of Ass_l(R) = {ass(S) : S maximal}", same_family(maximal, from_max_den),
        family_string(sorted(from_max_den)));
    add("the family is nonempty", !from_max_den.empty());
    bool incomparable = true;
    for (std::size_t i = 0; i < from_max_den.size(); ++i)
      for (std::size_t j = 0; j < from_max_den.size(); ++j)
        if (i != j && from_max_den[i].subset_of(from_max_den[j])) incomparable = false;
    add("the maximal ass ideals are pairwise incomparable", incomparable);
    if (r_.order() <= limits_.max_brute_force_order) {
      Tally contained;
      for (const auto& s : brute_force_denominator_sets(r_, limits_)) {
        const Subset a = ass(s);
        const auto it = std::find_if(prof().saturated.begin(), prof().saturated.end(),
                                     [&](const SaturatedSet& x) { return x.ideal == a; });
        contained.record(it != prof().saturated.end() && s.elements().subset_of(it->set.elements()),
                         [&] { return s.elements().to_string(); });
      }
      add("every denominator set with ass = a lies inside S_a", contained);
    }
  }

  void maximality_criterion() {
    Tally t;
    for (const auto& s : prof().saturated) {
      const FractionRing fr = build_fraction_ring(r_, s.set);
      const bool maximal_ring = is_localization_maximal(fr.ring, limits_);
      const bool in_max = find_set(prof().max_den, s.set.elements()).has_value();
      t.record(maximal_ring == in_max, [&] { return "a=" + s.ideal.to_string(); });
    }
    add("S^-1R is maximal iff Q_l(A) = A and Ass_l(A) = {0}", t);
  }

  void unit_pullback() {
    Tally t;
    for (const auto& s : dens()) {
      const FractionRing fr = build_fraction_ring(r_, s);
      const Subset pulled = fr.sigma.preimage(units(fr.ring));
      bool ok = false;
      try {
        const MulSet sp(r_, pulled);
        ok = is_left_denominator(sp).holds && ass(sp) == ass(s) && s.elements().subset_of(pulled) &&
             saturate(s).elements() == pulled;
      } catch (const Error&) {
      }
      t.record(ok, [&] { return s.elements().to_string(); });
    }
    add("sigma^-1(units of S^-1R) is a left denominator set with the same ass", t);
  }

  void radical_disjoint() {
    const auto& p = prof();
    add("ll_R and CL_l(R) are disjoint", !p.radical.intersects(p.localizable), "ll_R = " + p.radical.to_string());
    add("ll_R is inside NCL_l(R)", p.radical.subset_of(p.non_localizable));
  }

  // --- direct products -------------------------------------------------------

  void product_law(const Product& pr, const std::string& label) {
    const LocalizationProfile pp = profile(pr.ring, limits_);
    Family expected, expected_ass, expected_core;
    std::vector<std::pair<std::size_t, std::size_t>> origin;
    std::vector<LocalizationProfile> fps;
    for (std::size_t i = 0; i < pr.factors.size(); ++i) {
      fps.push_back(profile(pr.factors[i], limits_));
      for (std::size_t j = 0; j < fps[i].max_den.size(); ++j) {
        const MulSet& s = fps[i].max_den[j];
        expected.push_back(pr.lift(i, s.elements()));
        expected_ass.push_back(pr.lift(i, ass(s)));
        expected_core.push_back(pr.lift_with_zeros(i, core(s)));
        origin.emplace_back(i, j);
      }
    }
    const std::set<Subset, decltype(&canonical_less)> distinct(expected.begin(), expected.end(), &canonical_less);
    add(label + ": lifting maxDen_l(R_i) is injective", distinct.size() == expected.size());
    add(label + ": maxDen_l(R) is the disjoint union of lifted maxDen_l(R_i)",
        same_family(elements_of(pp.max_den), expected), std::to_string(expected.size()) + " sets");
    Tally ass_ok, core_ok, iso_ok;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const auto idx = find_set(pp.max_den, expected[k]);
      if (!idx) continue;
      const MulSet& s = pp.max_den[*idx];
      const auto what = [&] { return s.elements().to_string(); };
      ass_ok.record(ass(s) == expected_ass[k], what);
      core_ok.record(core(s) == expected_core[k], what);
      const auto [i, j] = origin[k];
      const RingMap f = pr.projections[i].then(fps[i].localizations[j].sigma);
      iso_ok.record(induced_map(pp.localizations[*idx], f).is_bijective(), what);
    }
    add(label + ": ass of a lifted set is R_1 x .. x ass(S_i) x .. x R_n", ass_ok);
    add(label + ": core of a lifted set is 0 x .. x S_i,c x .. x 0", core_ok);
    add(label + ": S_i^-1 R is isomorphic to S_i^-1 R_i", iso_ok);
  }

  void product_family() {
    const auto& cd = central();
    product_law(cd.product, "central factors");
    const Family mapped = [&] {
      Family f;
      for (const auto& s : prof().max_den) f.push_back(cd.to_product.image_of(s.elements()));
      return f;
    }();
    const LocalizationProfile pp = profile(cd.product.ring, limits_);
    add("maxDen_l(R) corresponds to maxDen_l of its central factor product",
        same_family(mapped, elements_of(pp.max_den)));
    if (auto ext = with_field_factor()) product_law(*ext, "R x F_2");
  }

  void maximal_product_law(const Product& pr, const std::string& label) {
    const LocalizationProfile pp = profile(pr.ring, limits_);
    const std::size_t k = pr.factors.size();
    Family expected, expected_ass;
    for (std::size_t i = 0; i < k; ++i) {
      expected.push_back(pr.lift(i, units(pr.factors[i])));
      expected_ass.push_back(pr.lift(i, pr.factors[i].zero_ideal()));
    }
    add(label + ": maxDen_l(R) = {R_1 x .. x R_i* x .. x R_n}", same_family(elements_of(pp.max_den), expected),
        std::to_string(k) + " factors");
    Tally ass_ok, iso_ok, quotient_ok;
    std::vector<const RingMap*> sigmas;
    for (std::size_t i = 0; i < k; ++i) {
      const auto idx = find_set(pp.max_den, expected[i]);
      const auto what = [&] { return "factor " + std::to_string(i + 1); };
      if (!idx) {
        ass_ok.record(false, what);
        continue;
      }
      const FractionRing& fr = pp.localizations[*idx];
      sigmas.push_back(&fr.sigma);
      ass_ok.record(ass(pp.max_den[*idx]) == expected_ass[i], what);
      // S_i^-1 R ≅ R_i via the projection, and σ_i is the quotient map.
      iso_ok.record(induced_map(fr, pr.projections[i]).is_bijective(), what);
      quotient_ok.record(fr.sigma.is_surjective() && fr.sigma.kernel() == expected_ass[i] &&
                             quotient_model_isomorphism(fr).is_bijective(),
                         what);
    }
    add(label + ": ass(S_i) = R_1 x .. x 0 x .. x R_n", ass_ok);
    bool comaximal = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (ideal_sum(pr.ring, expected_ass[i], expected_ass[j]).size() != pr.ring.order()) comaximal = false;
    add(label + ": ass(S_i) + ass(S_j) = R", comaximal);
    add(label + ": S_i^-1 R is isomorphic to R_i", iso_ok);
    add(label + ": sigma_i is the quotient map onto R/ass(S_i)", quotient_ok);
    add(label + ": ll_R = 0", pp.radical.size() == 1);
    add(label + ": r -> (r/1, .., r/1) is an isomorphism",
        sigmas.size() == k && tuple_map_injective(pr.ring, sigmas) && [&] {
          std::size_t prod = 1;
          for (const auto* s : sigmas) prod *= s->target().order();
          return prod == pr.ring.order();
        }());
    add(label + ": C_l(R) = R*", pp.completely == units(pr.ring));
    Subset some_unit = pr.ring.empty_subset();
    std::vector<Subset> nonunits;
    for (std::size_t i = 0; i < k; ++i) {
      some_unit |= expected[i];
      nonunits.push_back(units(pr.factors[i]).complement());
    }
    add(label + ": CL_l(R) = elements with some unit component", pp.localizable == some_unit);
    add(label + ": NCL_l(R) = product of (R_i minus R_i*)", pp.non_localizable == pr.box(nonunits));
  }

  void maximal_products() {
    if (auto lp = localization_product()) maximal_product_law(*lp, "product of maximal localizations");
    if (central_factors_maximal())
      maximal_product_law(central().product, "central factors of R");
    else
      not_applicable("R is a product of left localization maximal rings");
  }

  void maximal_products_localizable(const std::string& what) {
    const auto check = [&](const Product& pr, const std::string& label) {
      const LocalizationProfile pp = profile(pr.ring, limits_);
      add(label + ": " + what, (pp.localizable == nonzero(pr.ring)) == all_division(pr.factors));
    };
    if (auto lp = localization_product()) check(*lp, "product of maximal localizations");
    if (central_factors_maximal())
      check(central().product, "central factors of R");
    else
      not_applicable("R is a product of left localization maximal rings");
  }

  void decomposition() {
    const DecompositionResult& dec = prof().decomposition;
    const bool expected = central_factors_maximal();
    add("decomposition succeeds iff R is a product of localization maximal rings", dec.success == expected,
        dec.success ? std::to_string(n()) + " factors" : dec.reason);
    if (dec.success) {
      const Decomposition& d = *dec.decomposition;
      bool conclusions = true;
      for (const auto& c : d.conclusions) conclusions = conclusions && c.holds;
      add("conclusions (a)-(d) hold", conclusions);
      bool isos = true;
      for (const auto& theta : d.quotient_isomorphisms) isos = isos && hom_is_R_isomorphism(theta);
      add("each factor is R-isomorphic to R/ass(S_i)", isos && d.sigma.is_bijective());
      bool factors_maximal = true;
      for (const auto& f : d.factors) factors_maximal = factors_maximal && is_localization_maximal(f, limits_);
      add("each factor is left localization maximal", factors_maximal);
    } else {
      add("failure names a condition with a witness", dec.failed_condition >= 2 && !dec.witness.empty(),
          "condition " + std::to_string(dec.failed_condition));
    }
    if (auto lp = localization_product()) {
      const LocalizationProfile pp = profile(lp->ring, limits_);
      add("the product of maximal localizations decomposes back into its factors",
          pp.decomposition.success && pp.decomposition.decomposition->factors.size() == lp->factors.size());
    }
  }

  void localizable_products() {
    const auto& cd = central();
    bool all = true;
    for (const auto& f : cd.product.factors) all = all && profile(f, limits_).verdict.localizable;
    add("R is left localizable iff its central factors are", localizable() == all,
        std::to_string(cd.product.factors.size()) + " factors");
    if (auto ext = with_field_factor()) {
      const LocalizationProfile pp = profile(ext->ring, limits_);
      add("R x F_2 is left localizable iff R is", pp.verdict.localizable == localizable());
    }
  }

  void radical_of_localizable() {
    if (localizable())
      add("left localizable implies ll_R = 0", prof().radical.size() == 1);
    else
      not_applicable("R left localizable");
    const LocalizationProfile right = profile(opposite(r_), limits_);
    if (right.verdict.localizable)
      add("right localizable implies the right radical is 0", right.radical.size() == 1);
    else
      not_applicable("R right localizable");
    maximal_products_localizable("left localizable iff all factors are division rings");
  }

  // --- maximal localizations --------------------------------------------------

  void maximal_localizations() {
    const auto& p = prof();
    Tally s1, s2, s3, s4, s5, s6, t6;
    for (std::size_t i = 0; i < p.max_den.size(); ++i) {
      const MulSet& s = p.max_den[i];
      const FractionRing& fr = p.localizations[i];
      const FiniteRing& a = fr.ring;
      const Subset a_units = units(a);
      const auto what = [&] { return "S=" + s.elements().to_string(); };
      const Quotient q = quotient(r_, ass(s));
      const LargestQuotient lq = largest_left_quotient(q.ring);
      const RingMap to_ql = q.projection.then(lq.q.sigma);
      s1.record(s.elements() == q.projection.preimage(lq.s0.elements()) &&
                    q.projection.image_of(s.elements()) == lq.s0.elements() &&
                    induced_map(fr, to_ql).is_bijective(),
                what);
      const LargestQuotient la = largest_left_quotient(a);
      const RingMap theta = quotient_model_isomorphism(fr);
      s2.record(la.s0.elements() == a_units && theta.preimage(la.s0.elements()) == lq.s0.elements(), what);
      s3.record(fr.sigma.preimage(a_units) == s.elements(), what);
      const Subset image = fr.sigma.image_of(s.elements());
      s4.record(mul_closure(a, image | inverses(a, image)).elements() == a_units, what);
      s5.record(left_fractions(fr.sigma, s.elements()) == a_units, what);
      s6.record(is_localization_maximal(a, limits_), what);
      if (a.order() <= limits_.max_brute_force_order)
        for (const auto& t : brute_force_denominator_sets(a, limits_))
          if (ass(t).size() == 1) t6.record(t.elements().subset_of(a_units), what);
    }
    add("S = pi^-1(S_0(R/a)), pi(S) = S_0(R/a), S^-1R = Q_l(R/a)", s1);
    add("S_0(A) = A* and S_0(A) meets R/a in S_0(R/a)", s2);
    add("S = sigma^-1(A*)", s3);
    add("A* is generated by pi(S) and its inverses", s4);
    add("A* = {pi(s)^-1 pi(t)}", s5);
    add("Q_l(A) = A and Ass_l(A) = {0}", s6);
    if (t6.instances) add("every regular denominator set of A lies in A*", t6);
  }

  void division_dichotomy() {
    Tally t;
    const auto& p = prof();
    for (std::size_t i = 0; i < p.max_den.size(); ++i) {
      const Subset cover = p.max_den[i].elements() | ass(p.max_den[i]);
      t.record(is_division_ring(p.localizations[i].ring) == (cover.size() == r_.order()),
               [&] { return p.max_den[i].elements().to_string(); });
    }
    add("S^-1R is a division ring iff R = S u ass(S)", t);
  }

  void localizable_characterization() {
    const auto& p = prof();
    std::vector<FiniteRing> rings;
    std::vector<const RingMap*> sigmas;
    for (const auto& fr : p.localizations) {
      rings.push_back(fr.ring);
      sigmas.push_back(&fr.sigma);
    }
    const bool s1 = localizable();
    const bool s2 = p.radical.size() == 1 && all_division(rings);
    const bool s3 = tuple_map_injective(r_, sigmas) && all_division(rings);
    add("localizable iff ll_R = 0 and all S_i^-1 R are division rings", s1 == s2,
        s1 ? "localizable" : "not localizable");
    add("localizable iff sigma injective and all S_i^-1 R are division rings", s1 == s3);
    const auto& v = p.verdict;
    std::string ran;
    for (const auto* route : {&v.definitional, &v.radical_and_division, &v.semiprime_goldie, &v.quotient_product})
      ran += route->ran ? (route->holds ? "T" : "F") : "-";
    add("localizability routes agree", true, "routes " + ran + (v.partial ? " (partial)" : ""));
  }

  void core_intersections() {
    if (!localizable() || n() < 2) return not_applicable("R left localizable with |maxDen_l(R)| >= 2");
    const Family a = ass_list();
    Tally t;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Subset m = meet_except(r_, a, i);
      m.erase(r_.zero());
      t.record(!m.empty() && (prof().max_den[i].elements() & meet_except(r_, a, i)) == m,
               [&] { return "i=" + std::to_string(i + 1); });
    }
    add("S_i meets the other ass ideals exactly in their nonzero common elements", t);
  }

  void regular_sum_set() {
    if (!localizable() || n() < 2) return not_applicable("R left localizable with |maxDen_l(R)| >= 2");
    const auto& p = prof();
    const Family a = ass_list();
    Tally ci;
    Family parts;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Subset c = meet_except(r_, a, i);
      c.erase(r_.zero());
      parts.push_back(c);
      const auto what = [&] { return "C_" + std::to_string(i + 1) + "'=" + c.to_string(); };
      try {
        const MulSet cs = with_one(r_, c);
        const bool den = is_left_denominator(cs).holds && ass(cs) == a[i];
        ci.record(den && induced_map(build_fraction_ring(r_, cs), p.localizations[i].sigma).is_bijective(), what);
      } catch (const Error&) {
        ci.record(false, what);
      }
    }
    add("C_i' is a left denominator set with ass a_i and C_i'^-1 R = R_i", ci);

    Subset sums = r_.empty_subset();
    std::function<void(std::size_t, Elem)> go = [&](std::size_t i, Elem acc) {
      if (i == parts.size()) {
        sums.insert(acc);
        return;
      }
      parts[i].for_each([&](Elem c) { go(i + 1, r_.add(acc, c)); });
    };
    go(0, r_.zero());
    bool ok = false;
    std::string detail = "C' = " + sums.to_string();
    try {
      const MulSet c(r_, sums);
      if (is_left_denominator(c).holds && ass(c).size() == 1) {
        std::vector<FiniteRing> factors;
        for (const auto& fr : p.localizations) factors.push_back(fr.ring);
        const Product prod = direct_product(factors);
        std::vector<Elem> table(r_.order());
        std::vector<Elem> comps(factors.size());
        for (Elem x = 0; x < r_.order(); ++x) {
          for (std::size_t i = 0; i < factors.size(); ++i) comps[i] = p.localizations[i].sigma(x);
          table[x] = prod.combine(comps);
        }
        const RingMap sigma = RingMap::make(r_, prod.ring, std::move(table));
        ok = induced_map(build_fraction_ring(r_, c), sigma).is_bijective();
      }
    } catch (const Error& e) {
      detail += std::string("; ") + e.what();
    }
    add("C' = C_1' + .. + C_n' is in Den_l(R, 0) with C'^-1 R = R_1 x .. x R_n", ok, detail);
  }

  void division_embedding() {
    const auto& p = prof();
    // Statement 2 holds iff the saturated sets with division-ring
    // localizations have trivially intersecting ass ideals.
    Subset meet = r_.full_subset();
    for (const auto& s : p.saturated) {
      if (is_division_ring(build_fraction_ring(r_, s.set).ring)) meet &= s.ideal;
    }
    add("localizable iff some denominator sets with division ring localizations embed R", localizable() == (meet.size() == 1));
    if (!localizable()) return not_applicable("R left localizable");

    const Family a = ass_list();
    bool irredundant = true;
    for (std::size_t i = 0; i < a.size() && a.size() > 1; ++i)
      if (meet_except(r_, a, i).size() == 1) irredundant = false;
    add("no maximal localization can be dropped", irredundant, "n = " + std::to_string(n()));
    Tally pull;
    for (std::size_t i = 0; i < p.max_den.size(); ++i)
      pull.record(p.localizations[i].sigma.preimage(units(p.localizations[i].ring)) == p.max_den[i].elements(),
                  [&] { return std::to_string(i + 1); });
    add("S_i = sigma_i^-1(R_i*)", pull);

    // From the cores back to maxDen_l.
    std::vector<FractionRing> frs;
    for (const auto& s : p.max_den) frs.push_back(build_fraction_ring(r_, with_one(r_, core(s))));
    std::vector<const RingMap*> sigmas;
    std::vector<FiniteRing> rings;
    Family recovered;
    for (const auto& fr : frs) {
      sigmas.push_back(&fr.sigma);
      rings.push_back(fr.ring);
      recovered.push_back(fr.sigma.preimage(units(fr.ring)));
    }
    add("the cores give division rings embedding R, recovering maxDen_l(R)",
        all_division(rings) && tuple_map_injective(r_, sigmas) && same_family(recovered, elements_of(p.max_den)));
  }

  void goldie_characterization() {
    const bool s1 = localizable();
    const MulSet c(r_, regular_elements(r_));
    const FractionRing classical = build_fraction_ring(r_, c);
    const CentralDecomposition cd2 = central_decomposition(classical.ring);
    const bool s2 = all_division(cd2.product.factors) && cd2.product.factors.size() == n();
    const LargestQuotient lq = largest_left_quotient(r_);
    const CentralDecomposition cd4 = central_decomposition(lq.q.ring);
    const bool s4 = lq.classical_exists && all_division(cd4.product.factors) && cd4.product.factors.size() == n();
    add("localizable iff Q_l,cl(R) is a product of n division rings", s1 == s2);
    add("localizable iff Q_l(R) is a product of n division rings", s1 == s4);
    try {
      const bool s3 = is_semiprime(r_, limits_) && uniform_dimension(r_, limits_) == minimal_primes(r_, limits_).size() &&
                      minimal_primes(r_, limits_).size() == n();
      add("localizable iff semiprime with udim(R) = |Min(R)| = n", s1 == s3);
    } catch (const SizeGuardExceeded& e) {
      add("semiprime Goldie statement not evaluated", true, e.what());
    }
  }

  // --- regular denominator sets and bijections ------------------------------

  // S ↦ the monoid generated in T⁻¹R by σ(S) and `extra`, checked to be a
  // bijection maxDen_l(R) → maxDen_l(T⁻¹R) with inverse σ⁻¹ and S⁻¹R ≅ S̃⁻¹(T⁻¹R).
  void transfer(const MulSet& t, bool use_all_units, Tally& contained, Tally& bijection, Tally& iso) {
    const auto& p = prof();
    const FractionRing ft = build_fraction_ring(r_, t);
    const FiniteRing& q = ft.ring;
    const LocalizationProfile qp = profile(q, limits_);
    const Subset extra = use_all_units ? units(q) : inverses(q, ft.sigma.image_of(t.elements()));
    std::set<std::size_t> hit;
    bool ok = true;
    const auto what = [&] { return "T=" + t.elements().to_string(); };
    for (std::size_t i = 0; i < p.max_den.size(); ++i) {
      const MulSet& s = p.max_den[i];
      contained.record(t.elements().subset_of(s.elements()), what);
      const Subset tilde = mul_closure(q, ft.sigma.image_of(s.elements()) | extra).elements();
      const auto k = find_set(qp.max_den, tilde);
      if (!k || ft.sigma.preimage(tilde) != s.elements()) {
        ok = false;
        continue;
      }
      hit.insert(*k);
      iso.record(induced_map(p.localizations[i], ft.sigma.then(qp.localizations[*k].sigma)).is_bijective(), what);
    }
    bijection.record(ok && hit.size() == p.max_den.size() && hit.size() == qp.max_den.size(), what);
  }

  void quotient_bijection() {
    const auto& p = prof();
    const LargestQuotient lq = largest_left_quotient(r_);
    const Subset c = regular_elements(r_);
    Tally s0_in;
    for (const auto& s : p.max_den) s0_in.record(lq.s0.elements().subset_of(s.elements()) && c.subset_of(s.elements()),
                                                 [&] { return s.elements().to_string(); });
    add("S_0(R) and C_R lie in every maximal denominator set", s0_in);
    const bool c_max = find_set(p.max_den, c).has_value();
    add("maxDen_l(R) = {C_R} or C_R is not maximal", !c_max || p.max_den.size() == 1);
    Tally contained, bijection, iso;
    transfer(lq.s0, true, contained, bijection, iso);
    transfer(MulSet(r_, c), true, contained, bijection, iso);
    add("S -> S Q_l* is a bijection onto maxDen_l(Q_l) with inverse sigma^-1", bijection);
    add("S^-1 R = (S Q_l*)^-1 Q_l", iso);
  }

  void regular_set_bijection() {
    Tally contained, bijection, iso;
    for (const auto& t : dens())
      if (ass(t).size() == 1) transfer(t, false, contained, bijection, iso);
    add("T in Den_l(R,0) lies in every maximal denominator set", contained);
    add("S -> S~ is a bijection maxDen_l(R) -> maxDen_l(T^-1 R) with inverse sigma^-1", bijection);
    add("S^-1 R = S~^-1 (T^-1 R)", iso);
  }

  void regular_set_product() {
    const auto& p = prof();
    Tally family, iso;
    for (const auto& t : dens()) {
      if (ass(t).size() != 1) continue;
      const FractionRing ft = build_fraction_ring(r_, t);
      const CentralDecomposition cd = central_decomposition(ft.ring);
      bool maximal = true;
      for (const auto& f : cd.product.factors) maximal = maximal && is_localization_maximal(f, limits_);
      if (!maximal) continue;
      const RingMap tau = ft.sigma.then(cd.to_product);
      Family ts;
      const auto what = [&] { return "T=" + t.elements().to_string(); };
      for (std::size_t i = 0; i < cd.product.factors.size(); ++i) {
        const Subset ti = tau.preimage(cd.product.lift(i, units(cd.product.factors[i])));
        ts.push_back(ti);
        if (const auto k = find_set(p.max_den, ti))
          iso.record(induced_map(p.localizations[*k], tau.then(cd.product.projections[i])).is_bijective(), what);
        else
          iso.record(false, what);
      }
      family.record(same_family(ts, elements_of(p.max_den)), what);
    }
    if (family.instances == 0) return not_applicable("some T in Den_l(R,0) with T^-1 R a product of maximal rings");
    add("maxDen_l(R) = {tau^-1(R_1 x .. x R_i* x .. x R_n)}", family);
    add("T_i^-1 R is isomorphic to R_i", iso);
  }

  void semiprime_case() {
    if (!is_semiprime(r_, limits_)) return not_applicable("R semiprime");
    const auto& p = prof();
    const Subset c = regular_elements(r_);
    Tally inside;
    for (const auto& s : p.max_den)
      inside.record(c.subset_of(s.elements()), [&] { return s.elements().to_string(); });
    add("C_R lies in every maximal denominator set", inside);
    const FractionRing fq = build_fraction_ring(r_, MulSet(r_, c));
    const CentralDecomposition cd = central_decomposition(fq.ring);
    bool simple = true;
    for (const auto& f : cd.product.factors) simple = simple && two_sided_ideals(f, limits_).size() == 2;
    add("Q_l,cl(R) is a product of simple rings", simple, std::to_string(cd.product.factors.size()) + " factors");
    const LocalizationProfile qp = profile(fq.ring, limits_);
    const RingMap sigma = fq.sigma.then(cd.to_product);
    Family in_q, in_r;
    Tally iso, tilde_ok;
    const Subset c_inv = inverses(fq.ring, fq.sigma.image_of(c));
    for (std::size_t i = 0; i < cd.product.factors.size(); ++i) {
      const Subset si = cd.to_product.preimage(cd.product.lift(i, units(cd.product.factors[i])));
      in_q.push_back(si);
      const Subset back = fq.sigma.preimage(si);
      in_r.push_back(back);
      const auto what = [&] { return "i=" + std::to_string(i + 1); };
      if (const auto k = find_set(p.max_den, back)) {
        iso.record(induced_map(p.localizations[*k], sigma.then(cd.product.projections[i])).is_bijective(), what);
        tilde_ok.record(mul_closure(fq.ring, fq.sigma.image_of(back) | c_inv).elements() == si, what);
      } else {
        iso.record(false, what);
      }
    }
    add("maxDen_l(Q_l,cl) = {Q_1 x .. x Q_i* x .. x Q_n}", same_family(in_q, elements_of(qp.max_den)));
    add("maxDen_l(R) = {sigma^-1(S_i')}", same_family(in_r, elements_of(p.max_den)));
    add("S -> S~ recovers S_i'", tilde_ok);
    add("S_i^-1 R is isomorphic to Q_i", iso);
  }

  // --- cores ------------------------------------------------------------------

  void core_absorbs() {
    Tally nonempty, absorb, reach;
    for (const auto& s : dens()) {
      const Subset c = core(s);
      const auto what = [&] { return s.elements().to_string(); };
      nonempty.record(!c.empty(), what);
      if (c.empty()) continue;
      bool ok = true;
      s.elements().for_each([&](Elem x) { c.for_each([&](Elem y) { ok = ok && c.contains(r_.mul(x, y)); }); });
      absorb.record(ok, what);
      bool every = true;
      s.elements().for_each([&](Elem x) {
        bool found = false;
        s.elements().for_each([&](Elem t) { found = found || c.contains(r_.mul(t, x)); });
        every = every && found;
      });
      reach.record(every, what);
    }
    add("the core of a denominator set of a finite ring is nonempty", nonempty);
    add("S S_c is inside S_c", absorb);
    add("for every s in S some ts lies in S_c", reach);
  }

  void core_localization() {
    Tally den, iso;
    for (const auto& s : dens()) {
      const Subset c = core(s);
      if (c.empty()) continue;
      const auto what = [&] { return s.elements().to_string(); };
      try {
        const MulSet sc = with_one(r_, c);
        den.record(is_left_denominator(sc).holds && ass(sc) == ass(s), what);
        const FractionRing fc = build_fraction_ring(r_, sc);
        const FractionRing fs = build_fraction_ring(r_, s);
        const RingMap theta = induced_map(fc, fs.sigma);
        iso.record(hom_is_R_isomorphism(theta, fc.sigma, fs.sigma), what);
      } catch (const Error&) {
        den.record(false, what);
      }
    }
    add("S_c is a left denominator set with ass(S_c) = ass(S)", den);
    add("S_c^-1 R -> S^-1 R is an R-isomorphism", iso);
  }

  void ass_as_union() {
    Tally t;
    for (const auto& s : ores()) {
      Subset u = r_.empty_subset();
      s.elements().for_each([&](Elem x) { u |= r_.left_mult_kernel(x); });
      const Subset sum = additive_closure(r_, u);
      t.record(ass(s) == u && u == sum, [&] { return s.elements().to_string(); });
    }
    add("ass(S) = union of ker(s.) = sum of ker(s.)", t);
  }

  void core_is_max() {
    Tally t;
    for (const auto& s : ores()) {
      // max(S) straight from the definition.
      Subset mx = r_.empty_subset();
      s.elements().for_each([&](Elem x) {
        const Subset kx = r_.left_mult_kernel(x);
        bool top = true;
        s.elements().for_each([&](Elem y) {
          const Subset ky = r_.left_mult_kernel(y);
          if (kx != ky && kx.subset_of(ky)) top = false;
        });
        if (top) mx.insert(x);
      });
      t.record(core(s) == mx && max_kernel_elements(s) == mx, [&] { return s.elements().to_string(); });
    }
    add("S_c = max(S)", t);
  }

  void core_formula() {
    if (!localizable()) return not_applicable("R left localizable");
    const auto& p = prof();
    if (n() == 1) {
      const Subset c = core(p.max_den[0]);
      add("n = 1: S_1,c = S_1 = R minus 0", c == p.max_den[0].elements() && c == nonzero(r_));
      return;
    }
    const Family a = ass_list();
    Tally t;
    for (std::size_t i = 0; i < a.size(); ++i)
      t.record(core(p.max_den[i]) == (p.max_den[i].elements() & meet_except(r_, a, i)),
               [&] { return "i=" + std::to_string(i + 1); });
    add("S_i,c = S_i meet the intersection of a_j over j != i", t);
  }
};

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "4Jul10",  "1a27Nov12", "d4Jan13", "b27Nov12", "21Nov10", "b11Dec12", "a27Nov12", "c26Dec12",
      "25Nov12", "a29Nov12",  "27Nov12", "8Feb13",   "a1Dec12", "15Nov10",  "d1Dec12",  "29Nov12",
      "e1Dec12", "A3Dec12",   "D2Dec12", "3Dec12",   "A8Dec12", "C3Dec12",  "B3Dec12",  "a4Dec12",
      "b2Dec12", "A2Dec12",   "a2Dec12", "B2Dec12",  "C2Dec12"};
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<MulSet> multiplicative_family(const FiniteRing& r, const Limits& limits) {
  if (r.order() <= limits.max_brute_force_order) return all_multiplicative_sets(r, limits);
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> subsets;
  const auto push = [&](const Subset& s) {
    if (seen.insert(s).second) subsets.push_back(s);
  };
  push(Subset::of(r.order(), {r.one()}));
  push(units(r));
  for (const auto& s : saturated_denominator_sets(r, limits)) push(s.set.elements());
  for (Elem x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    try {
      push(mul_closure(r, Subset::of(r.order(), {x})).elements());
    } catch (const ZeroAbsorbed&) {
    }
  }
  sort_canonical(subsets);
  std::vector<MulSet> out;
  for (auto& s : subsets) out.emplace_back(r, std::move(s));
  return out;
}

std::vector<TheoremCheck> verify_theorems(const FiniteRing& r, const std::vector<std::string>& ids,
                                          const Limits& limits) {
  for (const auto& id : ids)
    if (!is_theorem_id(id)) throw std::invalid_argument("unknown theorem id '" + id + "'");
  Suite suite(r, limits);
  for (const auto& id : ids) suite.run(id);
  return std::move(suite.out);
}

}  // namespace orelab
