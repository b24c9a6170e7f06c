#include "orelab/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json_docs.hpp"
#include "orelab/ideals.hpp"
#include "orelab/ring_io.hpp"

namespace orelab {

namespace docs {

ordered_json set_json(const Subset& s) { return s.elements(); }

namespace {

ordered_json family_json(const std::vector<Subset>& family) {
  ordered_json out = ordered_json::array();
  for (const auto& s : family) out.push_back(set_json(s));
  return out;
}

ordered_json ring_ref(const FiniteRing& r) { return {{"hash", canonical_hash(r)}, {"order", r.order()}}; }

ordered_json route_json(const RouteResult& r) {
  return {{"ran", r.ran}, {"holds", r.holds}, {"detail", r.detail}};
}

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return ordered_json::array({w->first, w->second});
}

}  // namespace

ordered_json profile_json(const LocalizationProfile& p) {
  ordered_json doc;
  doc["ring"] = ring_ref(p.ring);
  doc["units"] = set_json(p.units);
  doc["ass_l"] = family_json(p.ass_l);
  ordered_json saturated = ordered_json::array();
  for (const auto& s : p.saturated) saturated.push_back({{"ass", set_json(s.ideal)}, {"set", set_json(s.set.elements())}});
  doc["saturated"] = saturated;
  ordered_json max_den = ordered_json::array();
  for (std::size_t i = 0; i < p.max_den.size(); ++i) {
    const auto& s = p.max_den[i];
    const auto& loc = p.localizations[i].ring;
    max_den.push_back({{"set", set_json(s.elements())},
                       {"ass", set_json(ass(s))},
                       {"core", set_json(core(s))},
                       {"localization", {{"hash", canonical_hash(loc)},
                                         {"order", loc.order()},
                                         {"division_ring", is_division_ring(loc)}}}});
  }
  doc["max_den"] = max_den;
  doc["radical"] = set_json(p.radical);
  doc["localizable"] = set_json(p.localizable);
  doc["completely"] = set_json(p.completely);
  doc["non_localizable"] = set_json(p.non_localizable);
  const auto& v = p.verdict;
  doc["verdict"] = {{"localizable", v.localizable},
                    {"partial", v.partial},
                    {"routes",
                     {{"definitional", route_json(v.definitional)},
                      {"radical_and_division", route_json(v.radical_and_division)},
                      {"semiprime_goldie", route_json(v.semiprime_goldie)},
                      {"quotient_product", route_json(v.quotient_product)}}},
                    {"witness", v.witness ? ordered_json(*v.witness) : ordered_json(nullptr)}};
  doc["localization_maximal"] = p.localization_maximal;
  const auto& d = p.decomposition;
  ordered_json dec;
  dec["success"] = d.success;
  ordered_json conditions = ordered_json::array();
  for (const auto& c : d.conditions) conditions.push_back({{"name", c.name}, {"holds", c.holds}});
  dec["conditions"] = conditions;
  dec["failed_condition"] = d.failed_condition;
  dec["reason"] = d.reason;
  dec["witness"] = d.witness;
  if (d.decomposition) {
    ordered_json factors = ordered_json::array();
    for (const auto& f : d.decomposition->factors) factors.push_back(ring_ref(f));
    dec["factors"] = factors;
    ordered_json conclusions = ordered_json::array();
    for (const auto& c : d.decomposition->conclusions) conclusions.push_back({{"name", c.name}, {"holds", c.holds}});
    dec["conclusions"] = conclusions;
  }
  doc["decomposition"] = dec;
  return doc;
}

ordered_json checks_json(const std::vector<TheoremCheck>& checks) {
  ordered_json list = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    list.push_back({{"theorem", c.theorem}, {"check", c.check}, {"pass", c.pass}, {"detail", c.detail}});
    failed += c.pass ? 0 : 1;
  }
  return {{"checks", list}, {"total", checks.size()}, {"failed", failed}};
}

ordered_json info_json(const FiniteRing& r, const Limits& limits) {
  ordered_json doc;
  doc["ring"] = ring_ref(r);
  doc["commutative"] = r.is_commutative();
  doc["zero"] = r.zero();
  doc["one"] = r.one();
  doc["units"] = set_json(units(r));
  doc["regular"] = set_json(regular_elements(r));
  doc["division_ring"] = is_division_ring(r);
  doc["ideals"] = family_json(two_sided_ideals(r, limits));
  doc["minimal_primes"] = family_json(minimal_primes(r, limits));
  doc["semiprime"] = is_semiprime(r, limits);
  try {
    doc["uniform_dimension"] = uniform_dimension(r, limits);
  } catch (const SizeGuardExceeded&) {
    doc["uniform_dimension"] = nullptr;
  }
  if (!r.names().empty()) doc["names"] = r.names();
  return doc;
}

ordered_json sided_json(const SidedProfiles& s) {
  ordered_json doc;
  doc["left"] = profile_json(s.left);
  doc["right"] = profile_json(s.right);
  doc["left_right_localizable"] = set_json(s.left_right_localizable);
  ordered_json two = ordered_json::array();
  for (const auto& m : s.two_sided_max) two.push_back(set_json(m.elements()));
  doc["two_sided_max_den"] = two;
  doc["two_sided_localizable"] = set_json(s.two_sided_localizable);
  doc["left_right_localizable_ring"] = s.left_right_localizable_ring;
  doc["two_sided_localizable_ring"] = s.two_sided_localizable_ring;
  return doc;
}

}  // namespace docs

namespace {

using docs::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Subset>& family) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? " " : "") + family[i].to_string();
  return out;
}

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << key;
  for (std::size_t i = key.size(); i < 22; ++i) os << ' ';
  os << value << '\n';
}

std::string route_text(const RouteResult& r) { return r.ran ? (r.holds ? "yes" : "no") : "not run"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text or json)");
}

std::string render_info(const FiniteRing& r, Format f, const Limits& limits) {
  if (f == Format::json) return dump(docs::info_json(r, limits));
  std::ostringstream os;
  row(os, "order", std::to_string(r.order()));
  row(os, "hash", canonical_hash(r));
  row(os, "commutative", yes_no(r.is_commutative()));
  row(os, "units", units(r).to_string());
  row(os, "regular", regular_elements(r).to_string());
  row(os, "division ring", yes_no(is_division_ring(r)));
  row(os, "ideals", join(two_sided_ideals(r, limits)));
  row(os, "minimal primes", join(minimal_primes(r, limits)));
  row(os, "semiprime", yes_no(is_semiprime(r, limits)));
  try {
    row(os, "uniform dimension", std::to_string(uniform_dimension(r, limits)));
  } catch (const SizeGuardExceeded& e) {
    row(os, "uniform dimension", std::string("not computed (") + e.what() + ")");
  }
  return os.str();
}

std::string render_axioms(const FiniteRing& r, Format f) {
  if (f == Format::json) return dump({{"ring", {{"hash", canonical_hash(r)}, {"order", r.order()}}}, {"valid", true}});
  return "ring axioms hold (order " + std::to_string(r.order()) + ", hash " + canonical_hash(r) + ")\n";
}

std::string render_ore(const OreReport& rep, Format f) {
  const auto witness_text = [](const Verdict& v) {
    if (v.holds || !v.witness) return std::string();
    return " (r=" + std::to_string(v.witness->first) + ", s=" + std::to_string(v.witness->second) + ")";
  };
  if (f == Format::json) {
    ordered_json doc;
    doc["ring"] = {{"hash", canonical_hash(rep.set.ring())}, {"order", rep.set.ring().order()}};
    doc["set"] = docs::set_json(rep.set.elements());
    doc["left_ore"] = {{"holds", rep.left_ore.holds}, {"witness", docs::witness_json(rep.left_ore.witness)}};
    doc["left_denominator"] = {{"holds", rep.left_denominator.holds},
                               {"witness", docs::witness_json(rep.left_denominator.witness)}};
    doc["ass"] = docs::set_json(rep.ass);
    doc["core"] = docs::set_json(rep.core);
    doc["core_empty"] = rep.core_empty;
    doc["saturation"] = rep.saturation ? docs::set_json(rep.saturation->elements()) : ordered_json(nullptr);
    doc["sidedness"] = to_string(denominator_sidedness(rep.set));
    return dump(doc);
  }
  std::ostringstream os;
  row(os, "set", rep.set.elements().to_string());
  row(os, "left Ore", yes_no(rep.left_ore.holds) + witness_text(rep.left_ore));
  row(os, "left denominator", yes_no(rep.left_denominator.holds) + witness_text(rep.left_denominator));
  row(os, "ass", rep.ass.to_string());
  row(os, "core", rep.core_empty ? "empty" : rep.core.to_string());
  row(os, "saturation", rep.saturation ? rep.saturation->elements().to_string() : "-");
  row(os, "sidedness", to_string(denominator_sidedness(rep.set)));
  return os.str();
}

std::string render_fraction(const FractionRing& fr, Format f) {
  const RingMap theta = quotient_model_isomorphism(fr);
  const bool r_iso = hom_is_R_isomorphism(theta);
  if (f == Format::json) {
    ordered_json doc;
    doc["base"] = {{"hash", canonical_hash(fr.base)}, {"order", fr.base.order()}};
    doc["dens"] = docs::set_json(fr.dens.elements());
    doc["ring"] = ordered_json::parse(canonical_form(fr.ring));
    doc["hash"] = canonical_hash(fr.ring);
    doc["sigma"] = fr.sigma.table();
    ordered_json reps = ordered_json::array();
    for (const auto& [s, r] : fr.reps) reps.push_back({s, r});
    doc["reps"] = reps;
    doc["kernel"] = docs::set_json(fr.sigma.kernel());
    doc["division_ring"] = is_division_ring(fr.ring);
    doc["quotient_model"] = {{"isomorphism", r_iso}, {"theta", theta.table()}};
    return dump(doc);
  }
  std::ostringstream os;
  row(os, "base", canonical_hash(fr.base) + " (order " + std::to_string(fr.base.order()) + ")");
  row(os, "denominators", fr.dens.elements().to_string());
  row(os, "localization", canonical_hash(fr.ring) + " (order " + std::to_string(fr.ring.order()) + ")");
  row(os, "division ring", yes_no(is_division_ring(fr.ring)));
  row(os, "ker sigma", fr.sigma.kernel().to_string());
  std::string sigma;
  for (Elem x = 0; x < fr.base.order(); ++x) sigma += (x ? " " : "") + std::to_string(fr.sigma(x));
  row(os, "sigma", sigma);
  std::string reps;
  for (std::size_t i = 0; i < fr.reps.size(); ++i)
    reps += (i ? " " : "") + std::to_string(i) + "=" + std::to_string(fr.reps[i].first) + "\\" +
            std::to_string(fr.reps[i].second);
  row(os, "classes (s\\r)", reps);
  row(os, "R/ass -> S^-1R", r_iso ? "R-isomorphism" : "NOT an isomorphism");
  return os.str();
}

std::string render_profile(const LocalizationProfile& p, Format f) {
  if (f == Format::json) return dump(docs::profile_json(p));
  std::ostringstream os;
  row(os, "ring", p.ring_hash + " (order " + std::to_string(p.ring.order()) + ")");
  row(os, "units", p.units.to_string());
  row(os, "Ass_l", join(p.ass_l));
  row(os, "maxDen_l", std::to_string(p.max_den.size()));
  for (std::size_t i = 0; i < p.max_den.size(); ++i) {
    const auto& loc = p.localizations[i].ring;
    os << "  S_" << i + 1 << " = " << p.max_den[i].elements().to_string() << "  ass " << ass(p.max_den[i]).to_string()
       << "  core " << core(p.max_den[i]).to_string() << "  localization order " << loc.order()
       << (is_division_ring(loc) ? ", division ring" : "") << '\n';
  }
  row(os, "ll_R", p.radical.to_string());
  row(os, "CL_l", p.localizable.to_string());
  row(os, "C_l", p.completely.to_string());
  row(os, "NCL_l", p.non_localizable.to_string());
  const auto& v = p.verdict;
  std::string verdict = v.localizable ? "yes" : "no";
  if (v.witness) verdict += " (witness " + std::to_string(*v.witness) + ")";
  if (v.partial) verdict += " [partial]";
  row(os, "left localizable", verdict);
  row(os, "  definitional", route_text(v.definitional) + "  " + v.definitional.detail);
  row(os, "  radical+division", route_text(v.radical_and_division) + "  " + v.radical_and_division.detail);
  row(os, "  semiprime Goldie", route_text(v.semiprime_goldie) + "  " + v.semiprime_goldie.detail);
  row(os, "  Q_l product", route_text(v.quotient_product) + "  " + v.quotient_product.detail);
  row(os, "localization maximal", yes_no(p.localization_maximal));
  const auto& d = p.decomposition;
  if (d.success) {
    std::string factors;
    for (const auto& fr : d.decomposition->factors)
      factors += " " + canonical_hash(fr) + "(" + std::to_string(fr.order()) + ")";
    row(os, "decomposition", std::to_string(d.decomposition->factors.size()) + " factors:" + factors);
  } else {
    std::string w;
    for (Elem e : d.witness) w += (w.empty() ? "" : ",") + std::to_string(e);
    row(os, "decomposition", "fails condition " + std::to_string(d.failed_condition) + ": " + d.reason +
                                 (w.empty() ? "" : " (witness " + w + ")"));
  }
  return os.str();
}

std::string render_sided(const SidedProfiles& s, Format f) {
  if (f == Format::json) return dump(docs::sided_json(s));
  std::ostringstream os;
  os << "[left]\n" << render_profile(s.left, f) << "[right]\n" << render_profile(s.right, f) << "[two-sided]\n";
  row(os, "CL_l,r", s.left_right_localizable.to_string());
  std::vector<Subset> two;
  for (const auto& m : s.two_sided_max) two.push_back(m.elements());
  row(os, "max two-sided dens", join(two));
  row(os, "CL", s.two_sided_localizable.to_string());
  row(os, "left and right loc.", yes_no(s.left_right_localizable_ring));
  row(os, "localizable", yes_no(s.two_sided_localizable_ring));
  return os.str();
}

std::string render_checks(const std::vector<TheoremCheck>& checks, Format f) {
  if (f == Format::json) return dump(docs::checks_json(checks));
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    failed += c.pass ? 0 : 1;
    os << (c.pass ? "PASS " : "FAIL ") << c.theorem;
    for (std::size_t i = c.theorem.size(); i < 10; ++i) os << ' ';
    os << c.check;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << '\n';
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace orelab
