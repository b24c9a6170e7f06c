// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orelab/batch.hpp"
#include "orelab/catalog.hpp"
#include "orelab/localize.hpp"
#include "orelab/maxden.hpp"
#include "orelab/product.hpp"
#include "support/oracle.hpp"

using namespace orelab;
using oracle::ESet;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(std::string n) { notes_.push_back(std::move(n)); }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

ESet E(const Subset& s) { return s.elements(); }

std::string show(const ESet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::set<ESet> family(const std::vector<MulSet>& v) {
  std::set<ESet> out;
  for (auto& s : v) out.insert(E(s.elements()));
  return out;
}

MulSet as_set(const FiniteRing& r, const ESet& s) { return MulSet(r, Subset::of(r.order(), s)); }

ESet intersection_of(const FiniteRing& r, const std::vector<ESet>& sets) {
  ESet out = oracle::all(r);
  for (auto& s : sets) out = oracle::meet(out, s);
  return out;
}

ESet union_of(const std::vector<ESet>& sets) {
  ESet out;
  for (auto& s : sets) out = oracle::join(out, s);
  return out;
}

/// R/a is a division ring: every element outside a is invertible modulo a.
bool quotient_is_division(const FiniteRing& r, const ESet& a) {
  for (Elem x = 0; x < r.order(); ++x)
    if (!oracle::has(a, x) && !oracle::unit_modulo(r, a, x)) return false;
  return true;
}

/// S_1^-1 R -> S_2^-1 R induced by sigma_2 is an R-isomorphism.
bool r_isomorphic(const FractionRing& a, const FractionRing& b) {
  try {
    return hom_is_R_isomorphism(induced_map(a, b.sigma), a.sigma, b.sigma);
  } catch (const Error&) {
    return false;
  }
}

ESet additive_sum(const FiniteRing& r, const ESet& a, const ESet& b) {
  ESet out;
  for (Elem x : a)
    for (Elem y : b) out.push_back(r.add(x, y));
  return oracle::sorted(out);
}

std::vector<FiniteRing> catalog_rings(std::vector<std::string>* names = nullptr) {
  std::vector<FiniteRing> out;
  for (const auto& spec : default_catalog()) {
    out.push_back(construct(spec));
    if (names) names->push_back(spec);
  }
  return out;
}

// 1
void zmod6_profile(Criterion& c) {
  auto r = zmod(6);
  auto md = oracle::max_den(r);
  std::vector<ESet> asses;
  for (auto& s : md) asses.push_back(oracle::ass(r, s));
  const ESet rad = intersection_of(r, asses), loc = union_of(md), comp = intersection_of(r, md);

  c.expect(std::set<ESet>(md.begin(), md.end()) == std::set<ESet>{{1, 3, 5}, {1, 2, 4, 5}}, "oracle maxDen");
  c.expect(rad == ESet{0} && loc == ESet{1, 2, 3, 4, 5} && comp == ESet{1, 5}, "oracle radical/L/C");

  auto p = profile(r);
  c.expect(family(p.max_den) == std::set<ESet>(md.begin(), md.end()), "maxDen_l");
  std::multiset<std::size_t> orders, expected_orders;
  for (std::size_t i = 0; i < p.max_den.size(); ++i) {
    const auto& fr = p.localizations[i];
    const ESet a = oracle::ass(r, E(p.max_den[i].elements()));
    orders.insert(fr.ring.order());
    expected_orders.insert(r.order() / a.size());
    c.expect(is_division_ring(fr.ring) == quotient_is_division(r, a), "localization division ring");
    c.expect(is_division_ring(fr.ring), "localization is a division ring");
  }
  c.expect(orders == expected_orders && orders == std::multiset<std::size_t>{2, 3}, "localization orders");
  c.expect(E(p.radical) == rad, "ll_R");
  c.expect(E(p.localizable) == loc, "L_l");
  c.expect(E(p.completely) == comp, "C_l");
  const auto& v = p.verdict;
  c.expect(v.localizable && !v.partial, "verdict");
  for (const auto* route : {&v.definitional, &v.radical_and_division, &v.semiprime_goldie, &v.quotient_product})
    c.expect(route->ran && route->holds, "route " + route->detail);
}

// 2
void zmod4_profile(Criterion& c) {
  auto r = zmod(4);
  auto md = oracle::max_den(r);
  c.expect(md == std::vector<ESet>{{1, 3}}, "oracle maxDen");
  auto p = profile(r);
  c.expect(family(p.max_den) == std::set<ESet>{{1, 3}}, "maxDen_l");
  c.expect(p.max_den.size() == 1 && E(ass(p.max_den[0])) == oracle::ass(r, md[0]) && E(ass(p.max_den[0])) == ESet{0},
           "ass");
  c.expect(!p.verdict.localizable && !p.verdict.partial, "verdict");
  for (const auto* route : {&p.verdict.definitional, &p.verdict.radical_and_division, &p.verdict.semiprime_goldie,
                            &p.verdict.quotient_product})
    c.expect(route->ran && !route->holds, "route agreement");
  const ESet nl = oracle::minus(oracle::all(r), union_of(md));
  c.expect(E(p.non_localizable) == nl, "NL_l = R minus L_l");
  c.expect(oracle::minus(E(p.non_localizable), ESet{0}) == ESet{2}, "nonzero NL_l = {2}");
  c.expect(p.verdict.witness && *p.verdict.witness == 2, "witness 2");
  c.note("NL_l = " + show(E(p.non_localizable)) + " (contains 0 by definition; nonzero part {2})");
}

// 3 and 4 share the denominator sets found by the oracle.
struct SmallRing {
  std::string spec;
  FiniteRing ring;
  std::vector<ESet> dens;
};

std::vector<SmallRing>& small_rings() {
  static std::vector<SmallRing> rings;
  return rings;
}

void oracle_equivalence(Criterion& c) {
  std::vector<std::string> names;
  auto all = catalog_rings(&names);
  std::size_t sets = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& r = all[k];
    if (r.order() > 8) continue;
    SmallRing sr{names[k], r, oracle::all_denominator_sets(r)};
    sets += sr.dens.size();
    c.expect(family(brute_force_denominator_sets(r)) == std::set<ESet>(sr.dens.begin(), sr.dens.end()),
             names[k] + ": brute-force family");
    std::set<ESet> saturations, expected;
    for (auto& s : sr.dens) saturations.insert(oracle::saturation(r, s));
    for (auto& s : saturated_denominator_sets(r)) {
      expected.insert(E(s.set.elements()));
      c.expect(E(s.ideal) == oracle::ass(r, E(s.set.elements())), names[k] + ": ideal index");
    }
    c.expect(saturations == expected, names[k] + ": saturations");
    // every denominator set sits inside the saturated set indexed by its ass
    std::map<ESet, ESet> by_ideal;
    for (auto& s : saturated_denominator_sets(r)) by_ideal[E(s.ideal)] = E(s.set.elements());
    for (auto& s : sr.dens) {
      auto it = by_ideal.find(oracle::ass(r, s));
      c.expect(it != by_ideal.end() && oracle::within(s, it->second), names[k] + ": S inside T_ass(S)");
    }
    small_rings().push_back(std::move(sr));
  }
  std::set<std::string> required{"zmod(2)",        "zmod(3)", "zmod(4)", "zmod(5)", "zmod(6)", "zmod(7)",
                                 "zmod(8)",        "gf(4)",   "gf(8)",   "product(gf(2),gf(2))",
                                 "upper_triangular(gf(2),2)"};
  for (auto& sr : small_rings()) required.erase(sr.spec);
  c.expect(required.empty(), "catalog covers the required small rings");
  c.note(std::to_string(small_rings().size()) + " rings, " + std::to_string(sets) + " denominator sets");
}

void core_laws(Criterion& c) {
  if (small_rings().empty()) oracle_equivalence(c);
  std::size_t nonempty = 0;
  for (auto& sr : small_rings()) {
    const auto& r = sr.ring;
    for (auto& s : sr.dens) {
      const std::string where = sr.spec + " S=" + show(s);
      auto m = as_set(r, s);
      const ESet a = oracle::ass(r, s);
      const ESet oc = oracle::core(r, s);
      c.expect(E(core(m)) == oc, where + ": core");
      c.expect(E(max_kernel_elements(m)) == oracle::max_kernel(r, s), where + ": max");
      c.expect(oc == oracle::max_kernel(r, s), where + ": S_c = max(S)");
      c.expect(oracle::meet(s, a).empty(), where + ": S meets ass");
      ESet kernels;
      for (Elem t : s) kernels = oracle::join(kernels, oracle::ker(r, t));
      c.expect(E(ass(m)) == a && kernels == a, where + ": ass = union of kernels");
      if (oc.empty()) continue;
      ++nonempty;
      const ESet sc = oracle::join(oc, ESet{r.one()});
      c.expect(oracle::is_multiplicative(r, sc), where + ": core multiplicative");
      c.expect(oracle::is_left_denominator(r, sc), where + ": core denominator");
      c.expect(oracle::ass(r, sc) == a, where + ": core ass");
      auto fc = build_fraction_ring(r, as_set(r, sc));
      auto fs = build_fraction_ring(r, m);
      c.expect(r_isomorphic(fc, fs), where + ": S_c^-1 R = S^-1 R");
    }
  }
  c.note(std::to_string(nonempty) + " sets with nonempty core");
}

// 5
void product_theorems(Criterion& c) {
  for (auto specs : std::vector<std::vector<std::string>>{
           {"gf(2)", "gf(3)"}, {"gf(2)", "matrix(gf(2),2)"}, {"gf(3)", "upper_triangular(gf(2),2)"}}) {
    std::vector<FiniteRing> factors;
    std::string name = "product(";
    for (auto& s : specs) {
      factors.push_back(construct(s));
      name += (name.back() == '(' ? "" : ",") + s;
    }
    name += ")";
    auto p = direct_product(factors);
    c.expect(p.ring.same_tables(construct(name)), name + ": catalog tables");

    std::map<ESet, std::pair<ESet, ESet>> expected;  // lifted S -> (ass, core)
    std::size_t count = 0;
    bool all_max = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      all_max = all_max && oracle::is_localization_maximal(f);
      for (auto& s : oracle::max_den(f)) {
        ++count;
        auto lifted = E(p.lift(i, Subset::of(f.order(), s)));
        expected[lifted] = {E(p.lift(i, Subset::of(f.order(), oracle::ass(f, s)))),
                            E(p.lift_with_zeros(i, Subset::of(f.order(), oracle::core(f, s))))};
        c.expect(oracle::is_left_denominator(p.ring, lifted), name + ": lifted set is a denominator set");
      }
    }
    c.expect(expected.size() == count, name + ": lifts are disjoint");
    auto prof = profile(p.ring);
    c.expect(prof.max_den.size() == count, name + ": |maxDen_l|");
    for (auto& m : prof.max_den) {
      auto it = expected.find(E(m.elements()));
      if (it == expected.end()) {
        c.expect(false, name + ": unexpected maximal set " + m.elements().to_string());
        continue;
      }
      c.expect(E(ass(m)) == it->second.first, name + ": ass formula");
      c.expect(E(core(m)) == it->second.second, name + ": core formula");
    }
    if (!all_max) {
      c.note(name + ": maxDen_l product law only");
      continue;
    }

    // Every factor is localization maximal.
    const ESet units = oracle::units(p.ring);
    ESet cl, nl = oracle::all(p.ring);
    for (Elem x = 0; x < p.ring.order(); ++x) {
      auto comp = p.components(x);
      bool some_unit = false, no_unit = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool u = oracle::has(oracle::units(factors[i]), comp[i]);
        some_unit = some_unit || u;
        no_unit = no_unit && !u;
      }
      if (some_unit) cl.push_back(x);
      if (!no_unit) nl = oracle::minus(nl, ESet{x});
    }
    std::set<ESet> s_i;
    for (std::size_t i = 0; i < factors.size(); ++i)
      s_i.insert(E(p.lift(i, Subset::of(factors[i].order(), oracle::units(factors[i])))));
    c.expect(family(prof.max_den) == s_i, name + ": (1) S_i = R_1 x .. x R_i* x .. x R_n");
    for (std::size_t i = 0; i < prof.max_den.size(); ++i) {
      const ESet a = E(ass(prof.max_den[i]));
      const auto& fr = prof.localizations[i];
      // the factor whose unit group appears in this S_i
      std::size_t k = 0;
      for (std::size_t j = 0; j < factors.size(); ++j)
        if (E(p.lift(j, Subset::of(factors[j].order(), oracle::units(factors[j])))) == E(prof.max_den[i].elements()))
          k = j;
      c.expect(a == E(p.lift(k, factors[k].zero_ideal())), name + ": (2) ass(S_i)");
      for (std::size_t j = 0; j < prof.max_den.size(); ++j)
        if (j != i)
          c.expect(oracle::all(p.ring) == additive_sum(p.ring, a, E(ass(prof.max_den[j]))), name + ": (2) sum");
      std::vector<Elem> table(factors[k].order());
      for (Elem x = 0; x < factors[k].order(); ++x) table[x] = fr.sigma(p.embed(k, x));
      bool iso = false;
      try {
        // sigma kills the other components, so sigma(e_k) = sigma(1)
        iso = RingMap::make(factors[k], fr.ring, table).is_bijective();
      } catch (const Error&) {
      }
      c.expect(iso && fr.sigma.kernel().elements() == a, name + ": (3) S_i^-1 R = R_i = R/ass(S_i)");
    }
    c.expect(E(prof.radical) == ESet{0}, name + ": (4) ll_R = 0");
    c.expect(prof.decomposition.success && prof.decomposition.decomposition->sigma.is_bijective(),
             name + ": (5) sigma isomorphism");
    c.expect(E(prof.completely) == units, name + ": (6) C_l = R*");
    c.expect(E(prof.localizable) == cl, name + ": (7) CL_l");
    c.expect(E(prof.non_localizable) == nl, name + ": (8) NL_l = prod(R_i minus R_i*)");
  }
}

// 6
void decomposition_round_trip(Criterion& c) {
  std::vector<std::string> names;
  auto all = catalog_rings(&names);
  std::vector<std::string> successes, failures;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& r = all[k];
    const bool expected = oracle::is_product_of_localization_maximal(r);
    auto prof = profile(r);
    const auto& d = prof.decomposition;
    c.expect(d.success == expected, names[k] + ": success matches oracle");
    c.expect(d.conditions.size() == 4, names[k] + ": four conditions reported");
    if (d.success) {
      successes.push_back(names[k]);
      const auto& dec = *d.decomposition;
      c.expect(dec.factors.size() == oracle::count_primitive_central_idempotents(r), names[k] + ": factor count");
      c.expect(dec.sigma.is_bijective(), names[k] + ": sigma bijective");
      for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        const auto& fr = prof.localizations[i];
        bool agrees = true;
        for (Elem x = 0; x < r.order(); ++x) agrees = agrees && dec.product.projections[i](dec.sigma(x)) == fr.sigma(x);
        c.expect(agrees && dec.factors[i].same_tables(fr.ring), names[k] + ": factor i is S_i^-1 R");
        c.expect(dec.quotient_isomorphisms[i].is_bijective(), names[k] + ": R/ass(S_i) = S_i^-1 R");
      }
    } else {
      failures.push_back(names[k] + "@" + std::to_string(d.failed_condition));
      c.expect(d.failed_condition >= 1 && d.failed_condition <= 4, names[k] + ": failed condition");
      c.expect(!d.witness.empty() && !d.reason.empty(), names[k] + ": witness");
      c.expect(!d.conditions[d.failed_condition - 1].holds, names[k] + ": reported condition fails");
    }
  }
  std::string s = "failures:";
  for (auto& f : failures) s += " " + f;
  c.note(std::to_string(successes.size()) + " successes; " + s);
  c.note("zmod(4) succeeds as a single localization-maximal factor");
}

// 7
void localizability(Criterion& c) {
  std::vector<std::string> names;
  auto all = catalog_rings(&names);
  std::size_t yes = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    auto v = is_left_localizable(all[k]);
    c.expect(!v.partial, names[k] + ": all routes ran");
    for (const auto* route : {&v.definitional, &v.radical_and_division, &v.semiprime_goldie, &v.quotient_product})
      c.expect(route->ran && route->holds == v.localizable, names[k] + ": unanimous");
    c.expect(v.localizable == oracle::is_product_of_fields(all[k]), names[k] + ": product of fields");
    yes += v.localizable;
  }
  const std::map<std::string, bool> known{{"zmod(6)", true},          {"zmod(4)", false},
                                          {"zmod(8)", false},         {"zmod(9)", false},
                                          {"zmod(12)", false},        {"matrix(gf(2),2)", false},
                                          {"upper_triangular(gf(2),2)", false}, {"product(gf(2),gf(3),gf(5))", true}};
  for (auto& [spec, expected] : known) c.expect(is_left_localizable(construct(spec)).localizable == expected, spec);
  c.note(std::to_string(yes) + " of " + std::to_string(all.size()) + " localizable");
}

// 8
void core_formula(Criterion& c) {
  std::vector<std::string> names;
  auto all = catalog_rings(&names);
  std::size_t tested = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& r = all[k];
    auto prof = profile(r);
    const std::size_t n = prof.max_den.size();
    if (!prof.verdict.localizable || n < 2) continue;
    ++tested;
    std::vector<ESet> s(n), a(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = E(prof.max_den[i].elements());
      a[i] = oracle::ass(r, s[i]);
    }
    std::vector<ESet> parts(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<ESet> others;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(a[j]);
      const ESet meet_others = intersection_of(r, others);
      const ESet formula = oracle::meet(s[i], meet_others);
      c.expect(oracle::core(r, s[i]) == formula && !formula.empty(), names[k] + ": S_ic formula");
      c.expect(E(core(prof.max_den[i])) == formula, names[k] + ": library core");
      parts[i] = oracle::minus(meet_others, ESet{r.zero()});
      c.expect(formula == parts[i], names[k] + ": S_i meets the others in all nonzero elements");
      const ESet ci = oracle::join(parts[i], ESet{r.one()});
      c.expect(oracle::is_left_denominator(r, ci) && oracle::is_multiplicative(r, ci), names[k] + ": C_i' denominator");
      c.expect(oracle::ass(r, ci) == a[i], names[k] + ": ass(C_i') = a_i");
      c.expect(r_isomorphic(build_fraction_ring(r, as_set(r, ci)), prof.localizations[i]),
               names[k] + ": C_i'^-1 R = R_i");
    }
    ESet sums{r.zero()};
    for (std::size_t i = 0; i < n; ++i) {
      ESet next;
      for (Elem x : sums)
        for (Elem y : parts[i]) next.push_back(r.add(x, y));
      sums = oracle::sorted(next);
    }
    c.expect(oracle::is_multiplicative(r, sums) && oracle::is_left_denominator(r, sums), names[k] + ": C' denominator");
    c.expect(oracle::ass(r, sums) == ESet{r.zero()}, names[k] + ": ass(C') = 0");
    auto fc = build_fraction_ring(r, as_set(r, sums));
    std::size_t prod = 1;
    for (auto& l : prof.localizations) prod *= l.ring.order();
    c.expect(fc.sigma.is_bijective() && fc.ring.order() == prod, names[k] + ": C'^-1 R = prod R_i");
  }
  c.note(std::to_string(tested) + " localizable rings with n >= 2");
}

// 9
void quotient_laws(Criterion& c) {
  std::vector<std::string> names;
  auto all = catalog_rings(&names);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& r = all[k];
    auto q = largest_left_quotient(r);
    c.expect(E(q.s0.elements()) == oracle::regular(r), names[k] + ": S_0 = regular elements");
    const auto& Q = q.q.ring;
    auto qq = largest_left_quotient(Q);
    c.expect(qq.q.ring.same_tables(Q) && qq.q.sigma.table() == RingMap::identity(Q).table(),
             names[k] + ": Q_l(Q_l(R)) = Q_l(R)");
    c.expect(E(qq.s0.elements()) == oracle::units(Q), names[k] + ": S_0(Q_l) = Q_l*");
    ESet fractions;
    for (Elem s : q.s0.list())
      for (Elem t : q.s0.list()) fractions.push_back(q.q.fraction(s, t));
    c.expect(oracle::sorted(fractions) == oracle::units(Q), names[k] + ": Q_l* = {s^-1 t}");
  }
}

// 10
void determinism(Criterion& c) {
  BatchManifest m;
  m.specs = default_catalog();
  auto one = run_batch(m, 1, Format::text);
  auto four = run_batch(m, 4, Format::text);
  c.expect(one.summary == four.summary, "summary byte-identical");
  c.expect(one.exit_code == 0 && four.exit_code == 0, "no failing entries");
  for (std::size_t i = 0; i < one.entries.size(); ++i)
    c.expect(one.entries[i].report == four.entries[i].report, one.entries[i].spec + ": report identical");
  auto json1 = run_batch(m, 1, Format::json);
  auto json4 = run_batch(m, 4, Format::json);
  for (std::size_t i = 0; i < json1.entries.size(); ++i)
    c.expect(json1.entries[i].report == json4.entries[i].report, json1.entries[i].spec + ": json identical");
  c.note(std::to_string(one.entries.size()) + " specs");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double limit_s;  // 0 = none
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries{
      {1, "zmod(6) profile", 1.0, zmod6_profile},
      {2, "zmod(4) profile", 1.0, zmod4_profile},
      {3, "oracle equivalence of saturated families (order <= 8)", 300.0, oracle_equivalence},
      {4, "core laws on every small denominator set", 0, core_laws},
      {5, "product theorems", 120.0, product_theorems},
      {6, "product decomposition round trip", 0, decomposition_round_trip},
      {7, "localizability characterization", 0, localizability},
      {8, "core formula and C_i' sets", 0, core_formula},
      {9, "Q_l laws", 0, quotient_laws},
      {10, "batch determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = e.limit_s == 0 || secs < e.limit_s;
    const bool pass = error.empty() && c.failed() == 0 && in_time;
    failed += !pass;
    std::printf("%s criterion %2d: %s  [%zu checks, %.3f s%s]\n", pass ? "PASS" : "FAIL", e.id, e.title, c.checks(),
                secs, e.limit_s > 0 ? (" / limit " + std::to_string(static_cast<int>(e.limit_s)) + " s").c_str() : "");
    for (const auto& n : c.notes()) std::printf("      note: %s\n", n.c_str());
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (!in_time) std::printf("      exceeded time limit\n");
    for (const auto& f : c.failures()) std::printf("      failed: %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed ? 1 : 0;
}
