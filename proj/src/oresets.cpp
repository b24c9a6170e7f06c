#include "orelab/oresets.hpp"

#include <algorithm>
#include <deque>

namespace orelab {

MulSet::MulSet(FiniteRing ring, Subset elements) : ring_(std::move(ring)), elements_(std::move(elements)) {
  if (elements_.universe() != ring_.order()) throw Error("multiplicative set over a carrier of the wrong size");
  if (!elements_.contains(ring_.one())) throw Error("multiplicative set must contain 1");
  if (elements_.contains(ring_.zero())) throw Error("multiplicative set must exclude 0");
  const auto e = elements_.elements();
  for (Elem a : e)
    for (Elem b : e)
      if (!elements_.contains(ring_.mul(a, b)))
        throw Error("set is not multiplicatively closed: " + std::to_string(a) + "*" + std::to_string(b));
}

MulSet mul_closure(const FiniteRing& r, std::span<const Elem> generators) {
  const auto n = static_cast<Elem>(r.order());
  for (Elem g : generators) {
    if (g >= n) throw Error("generator outside carrier");
    if (g == r.zero()) throw ZeroAbsorbed({g});
  }
  // Breadth-first over words in the generators; parent links recover the chain.
  constexpr Elem none = ~Elem{0};
  std::vector<Elem> parent(n, none), via(n, none);
  Subset seen(n);
  seen.insert(r.one());
  std::deque<Elem> queue{r.one()};
  auto chain_to = [&](Elem x) {
    std::vector<Elem> c;
    for (Elem cur = x; via[cur] != none; cur = parent[cur]) c.push_back(via[cur]);
    std::reverse(c.begin(), c.end());
    return c;
  };
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem g : generators) {
      const Elem y = r.mul(x, g);
      if (y == r.zero()) {
        auto c = chain_to(x);
        c.push_back(g);
        throw ZeroAbsorbed(std::move(c));
      }
      if (seen.contains(y)) continue;
      seen.insert(y);
      parent[y] = x;
      via[y] = g;
      queue.push_back(y);
    }
  }
  return MulSet(r, std::move(seen));
}

MulSet mul_closure(const FiniteRing& r, const Subset& generators) {
  const auto g = generators.elements();
  return mul_closure(r, g);
}

Verdict is_left_ore(const MulSet& set) {
  const auto& r = set.ring();
  const auto n = static_cast<Elem>(r.order());
  const auto s_elems = set.list();
  for (Elem r0 = 0; r0 < n; ++r0) {
    for (Elem s : s_elems) {
      Subset left_multiples(n);  // Rs
      for (Elem x = 0; x < n; ++x) left_multiples.insert(r.mul(x, s));
      const bool ok = std::any_of(s_elems.begin(), s_elems.end(),
                                  [&](Elem t) { return left_multiples.contains(r.mul(t, r0)); });
      if (!ok) return Verdict{false, Witness{r0, s}};
    }
  }
  return Verdict{};
}

Subset ass(const MulSet& set) {
  const auto& r = set.ring();
  Subset out(r.order());
  set.elements().for_each([&](Elem s) { out |= r.left_mult_kernel(s); });
  return out;
}

Subset r_ass(const FiniteRing& r, const Subset& x) {
  Subset out(r.order());
  x.for_each([&](Elem e) { out |= r.right_mult_kernel(e); });
  return out;
}

Verdict is_left_denominator(const MulSet& set) {
  if (auto ore = is_left_ore(set); !ore) return ore;
  const auto& r = set.ring();
  const Subset a = ass(set);
  const auto n = static_cast<Elem>(r.order());
  for (Elem x = 0; x < n; ++x) {
    if (a.contains(x)) continue;
    for (Elem s : set.list())
      if (r.mul(x, s) == r.zero()) return Verdict{false, Witness{x, s}};
  }
  return Verdict{};
}

Subset core(const MulSet& set) {
  if (auto ore = is_left_ore(set); !ore) throw NotOre(ore.witness->first, ore.witness->second);
  const Subset a = ass(set);
  Subset out(set.ring().order());
  set.elements().for_each([&](Elem s) {
    if (set.ring().left_mult_kernel(s) == a) out.insert(s);
  });
  return out;
}

Subset max_kernel_elements(const MulSet& set) {
  const auto elems = set.list();
  std::vector<Subset> kernels;
  kernels.reserve(elems.size());
  for (Elem s : elems) kernels.push_back(set.ring().left_mult_kernel(s));
  Subset out(set.ring().order());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < elems.size() && maximal; ++j)
      if (kernels[i] != kernels[j] && kernels[i].subset_of(kernels[j])) maximal = false;
    if (maximal) out.insert(elems[i]);
  }
  return out;
}

MulSet semigroup_product(const MulSet& s, const MulSet& t) {
  if (!s.ring().same_tables(t.ring())) throw Error("semigroup product of sets over different rings");
  return mul_closure(s.ring(), s.elements() | t.elements());
}

const char* to_string(Sidedness s) {
  switch (s) {
    case Sidedness::left_only:
      return "left-only";
    case Sidedness::right_only:
      return "right-only";
    case Sidedness::two_sided:
      return "two-sided";
    case Sidedness::neither:
      return "neither";
  }
  return "?";
}

Sidedness denominator_sidedness(const MulSet& s) {
  const bool left = is_left_denominator(s).holds;
  const bool right = is_left_denominator(MulSet(opposite(s.ring()), s.elements())).holds;
  if (left && right) return Sidedness::two_sided;
  if (left) return Sidedness::left_only;
  if (right) return Sidedness::right_only;
  return Sidedness::neither;
}

OreReport ore_report(const MulSet& s) {
  OreReport rep{s, is_left_ore(s), {}, ass(s), Subset(s.ring().order()), true, std::nullopt};
  rep.left_denominator = rep.left_ore ? is_left_denominator(s) : rep.left_ore;
  if (rep.left_ore) {
    rep.core = core(s);
    rep.core_empty = rep.core.empty();
  }
  if (rep.left_denominator) rep.saturation = saturate(s);
  return rep;
}

}  // namespace orelab
