#include "orelab/localize.hpp"

#include <random>

#include "orelab/ideals.hpp"

namespace orelab {

namespace {

constexpr Elem none = ~Elem{0};

/// Lookup tables for left Ore completions over a fixed denominator set.
class OreCalculus {
 public:
  OreCalculus(const FiniteRing& r, const MulSet& s)
      : r_(r), n_(static_cast<Elem>(r.order())), dens_(s.list()), pos_(n_, none), ass_(ass(s)) {
    for (Elem i = 0; i < dens_.size(); ++i) pos_[dens_[i]] = i;
    divisor_.assign(dens_.size() * n_, none);
    killers_.resize(dens_.size());
    for (Elem i = 0; i < dens_.size(); ++i) {
      const Elem t = dens_[i];
      for (Elem x = n_; x-- > 0;) divisor_[i * n_ + r_.mul(x, t)] = x;
      for (Elem x = 0; x < n_; ++x)
        if (r_.mul(x, t) == r_.zero()) killers_[i].push_back(x);
    }
    common_.assign(dens_.size() * dens_.size(), {none, none});
  }

  const std::vector<Elem>& dens() const { return dens_; }
  const std::vector<Elem>& pos() const { return pos_; }
  const Subset& ass_set() const { return ass_; }

  /// Smallest x with x t = v, or none.
  Elem divide(Elem v, Elem t) const { return divisor_[pos_[t] * n_ + v]; }
  /// {x : x t = 0}
  const std::vector<Elem>& killers(Elem t) const { return killers_[pos_[t]]; }

  /// (c, d) with c ∈ S and c x = d t. Smallest c first.
  std::pair<Elem, Elem> complete(Elem x, Elem t) const {
    for (Elem c : dens_)
      if (Elem d = divide(r_.mul(c, x), t); d != none) return {c, d};
    throw InternalInconsistency("left Ore completion missing for (" + std::to_string(x) + "," + std::to_string(t) + ")");
  }

  /// Memoized complete() for x ∈ S.
  std::pair<Elem, Elem> common(Elem s, Elem t) {
    auto& slot = common_[pos_[s] * dens_.size() + pos_[t]];
    if (slot.first == none) slot = complete(s, t);
    return slot;
  }

  /// s⁻¹r = t⁻¹q iff c r − d q ∈ ass(S) for one completion c s = d t with c ∈ S.
  bool equivalent(Elem s, Elem r, Elem t, Elem q) {
    const auto [c, d] = common(s, t);
    return ass_.contains(r_.sub(r_.mul(c, r), r_.mul(d, q)));
  }

 private:
  const FiniteRing& r_;
  Elem n_;
  std::vector<Elem> dens_;
  std::vector<Elem> pos_;
  Subset ass_;
  std::vector<Elem> divisor_;
  std::vector<std::vector<Elem>> killers_;
  std::vector<std::pair<Elem, Elem>> common_;
};

/// ∃ c, d ∈ R with c s = d t ∈ S and c r = d q, by exhaustive scan.
bool equivalent_by_definition(const FiniteRing& ring, const MulSet& set, Elem s, Elem r, Elem t, Elem q) {
  const auto n = static_cast<Elem>(ring.order());
  for (Elem c = 0; c < n; ++c) {
    const Elem cs = ring.mul(c, s);
    if (!set.contains(cs)) continue;
    const Elem cr = ring.mul(c, r);
    for (Elem d = 0; d < n; ++d)
      if (ring.mul(d, t) == cs && ring.mul(d, q) == cr) return true;
  }
  return false;
}

}  // namespace

FractionRing build_fraction_ring(const FiniteRing& r, const MulSet& s, const FractionOptions& opts) {
  if (!s.ring().same_tables(r)) throw Error("denominator set belongs to a different ring");
  if (auto v = is_left_denominator(s); !v) throw NotDenominator(v.witness->first, v.witness->second);

  OreCalculus ore(r, s);
  const auto n = static_cast<Elem>(r.order());
  const auto& dens = ore.dens();
  const auto m = static_cast<Elem>(dens.size());

  // Classify every pair (s, r) against the class representatives found so far.
  std::vector<Elem> class_of(static_cast<std::size_t>(m) * n, none);
  std::vector<std::pair<Elem, Elem>> reps;
  std::vector<std::vector<std::pair<Elem, Elem>>> members;
  for (Elem i = 0; i < m; ++i)
    for (Elem x = 0; x < n; ++x) {
      Elem found = none;
      for (Elem k = 0; k < reps.size() && found == none; ++k)
        if (ore.equivalent(dens[i], x, reps[k].first, reps[k].second)) found = k;
      if (found == none) {
        found = static_cast<Elem>(reps.size());
        reps.emplace_back(dens[i], x);
        members.emplace_back();
      }
      class_of[i * n + x] = found;
      members[found].emplace_back(dens[i], x);
    }
  auto cls = [&](Elem den, Elem num) { return class_of[ore.pos()[den] * n + num]; };

  const bool exhaustive = r.order() <= opts.exhaustive_order;
  if (exhaustive) {
    for (Elem i = 0; i < m; ++i)
      for (Elem x = 0; x < n; ++x)
        for (Elem j = 0; j < m; ++j)
          for (Elem y = 0; y < n; ++y)
            if (equivalent_by_definition(r, s, dens[i], x, dens[j], y) != (class_of[i * n + x] == class_of[j * n + y]))
              throw InternalInconsistency("fraction equivalence disagrees with its definition");
  }

  // s⁻¹r + t⁻¹q = (s₁t)⁻¹(r₁r + s₁q) where s₁t = r₁s, s₁ ∈ S.
  auto sum_with = [&](Elem s0, Elem r0, Elem t0, Elem q0, Elem s1, Elem r1) {
    return cls(r.mul(s1, t0), r.add(r.mul(r1, r0), r.mul(s1, q0)));
  };
  // (s⁻¹r)(t⁻¹q) = (t₁s)⁻¹(r₂q) where t₁r = r₂t, t₁ ∈ S.
  auto product_with = [&](Elem s0, Elem /*r0*/, Elem /*t0*/, Elem q0, Elem t1, Elem r2) {
    return cls(r.mul(t1, s0), r.mul(r2, q0));
  };

  const auto k = static_cast<Elem>(reps.size());
  std::vector<Elem> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
  std::mt19937_64 rng(opts.seed);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      const auto [s0, r0] = reps[a];
      const auto [t0, q0] = reps[b];
      const auto [s1, r1] = ore.complete(t0, s0);
      const auto [t1, r2] = ore.complete(r0, t0);
      const Elem sum = sum_with(s0, r0, t0, q0, s1, r1);
      const Elem prod = product_with(s0, r0, t0, q0, t1, r2);
      add[a * k + b] = sum;
      mul[a * k + b] = prod;

      auto check_pair = [&](Elem sx, Elem rx, Elem ty, Elem qy, Elem w1, Elem w2, bool for_sum) {
        const Elem got = for_sum ? sum_with(sx, rx, ty, qy, w1, w2) : product_with(sx, rx, ty, qy, w1, w2);
        if (got != (for_sum ? sum : prod))
          throw InternalInconsistency(std::string("fraction ") + (for_sum ? "sum" : "product") +
                                      " depends on the choice of representative or witness");
      };
      if (exhaustive) {
        for (const auto& [sx, rx] : members[a])
          for (const auto& [ty, qy] : members[b])
            for (Elem w = 0; w < n; ++w)
              for (Elem u : dens) {
                if (r.mul(u, ty) == r.mul(w, sx)) check_pair(sx, rx, ty, qy, u, w, true);
                if (r.mul(u, rx) == r.mul(w, ty)) check_pair(sx, rx, ty, qy, u, w, false);
              }
      } else {
        for (std::size_t round = 0; round < opts.samples; ++round) {
          const auto& [sx, rx] = members[a][rng() % members[a].size()];
          const auto& [ty, qy] = members[b][rng() % members[b].size()];
          for (int which = 0; which < 2; ++which) {
            const bool for_sum = which == 0;
            // Witness (u, w): u ∈ S from a random start, w randomized within its coset of solutions.
            const Elem target_elem = for_sum ? ty : rx;
            const Elem right = for_sum ? sx : ty;
            const std::size_t start = rng() % dens.size();
            for (std::size_t off = 0; off < dens.size(); ++off) {
              const Elem u = dens[(start + off) % dens.size()];
              const Elem w0 = ore.divide(r.mul(u, target_elem), right);
              if (w0 == none) continue;
              const auto& kill = ore.killers(right);
              const Elem w = r.add(w0, kill[rng() % kill.size()]);
              check_pair(sx, rx, ty, qy, u, w, for_sum);
              break;
            }
          }
        }
      }
    }

  const Elem zero = cls(r.one(), r.zero());
  const Elem one = cls(r.one(), r.one());
  FiniteRing loc = [&] {
    try {
      return FiniteRing::from_tables(k, std::move(add), std::move(mul), zero, one);
    } catch (const AxiomViolation& e) {
      throw InternalInconsistency(std::string("fraction ring fails a ring axiom: ") + e.what());
    }
  }();

  std::vector<Elem> sigma_table(n);
  for (Elem x = 0; x < n; ++x) sigma_table[x] = cls(r.one(), x);
  RingMap sigma = RingMap::make(r, loc, std::move(sigma_table));

  FractionRing fr{r, s, loc, sigma, std::move(reps), ore.pos(), std::move(class_of)};

  if (sigma.kernel() != ore.ass_set()) throw InternalInconsistency("kernel of r -> r/1 differs from ass(S)");
  for (Elem d : dens)
    if (!inverse(loc, sigma(d))) throw InternalInconsistency("denominator " + std::to_string(d) + " not inverted");
  for (Elem c = 0; c < k; ++c) {
    const auto [d, x] = fr.reps[c];
    if (loc.mul(*inverse(loc, sigma(d)), sigma(x)) != c)
      throw InternalInconsistency("representative does not evaluate to its class");
  }
  return fr;
}

RingMap quotient_model_isomorphism(const FractionRing& fr) {
  const Subset a = ass(fr.dens);
  const Quotient q = quotient(fr.base, a);
  std::vector<Elem> table(q.ring.order());
  for (Elem c = 0; c < table.size(); ++c) table[c] = fr.sigma(q.representative[c]);
  for (Elem x = 0; x < fr.base.order(); ++x)
    if (table[q.projection(x)] != fr.sigma(x))
      throw InternalInconsistency("r -> r/1 is not constant on cosets of ass(S)");
  try {
    RingMap theta = RingMap::make(q.ring, fr.ring, std::move(table));
    if (!hom_is_R_isomorphism(theta, q.projection, fr.sigma))
      throw InternalInconsistency("R/ass(S) -> S^-1 R is not an R-isomorphism");
    return theta;
  } catch (const AxiomViolation& e) {
    throw InternalInconsistency(std::string("R/ass(S) -> S^-1 R is not a homomorphism: ") + e.what());
  }
}

RingMap induced_map(const FractionRing& fr, const RingMap& f) {
  if (!f.source().same_tables(fr.base)) throw Error("induced map: source differs from the base ring");
  const auto& t = f.target();
  std::vector<Elem> table(fr.ring.order());
  for (Elem c = 0; c < table.size(); ++c) {
    const auto [d, x] = fr.reps[c];
    const auto u = inverse(t, f(d));
    if (!u) throw Error("induced map: image of denominator " + std::to_string(d) + " is not a unit");
    table[c] = t.mul(*u, f(x));
  }
  return RingMap::make(fr.ring, t, std::move(table));
}

LargestQuotient largest_left_quotient(const FiniteRing& r) {
  const Subset regular = regular_elements(r);
  MulSet c(r, regular);
  if (!is_left_denominator(c)) throw InternalInconsistency("regular elements of a finite ring are not a left denominator set");
  if (regular != units(r)) throw InternalInconsistency("regular elements differ from units in a finite ring");
  FractionRing q = build_fraction_ring(r, c);
  return LargestQuotient{std::move(c), std::move(q), true};
}

MulSet saturate(const MulSet& s) {
  if (auto v = is_left_denominator(s); !v) throw NotDenominator(v.witness->first, v.witness->second);
  const auto& r = s.ring();
  const Quotient q = quotient(r, ass(s));
  const Subset via_quotient = q.projection.preimage(units(q.ring));
  const FractionRing fr = build_fraction_ring(r, s);
  const Subset via_fractions = fr.sigma.preimage(units(fr.ring));
  if (via_quotient != via_fractions)
    throw InternalInconsistency("saturation differs between quotient and fraction-ring routes");
  return MulSet(r, via_quotient);
}

}  // namespace orelab
