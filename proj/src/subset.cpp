#include "orelab/subset.hpp"

#include <algorithm>

namespace orelab {

Subset Subset::of(std::size_t universe, std::span<const Elem> elems) {
  Subset s(universe);
  for (Elem e : elems) {
    if (e >= universe) throw Error("element " + std::to_string(e) + " outside carrier of size " + std::to_string(universe));
    s.insert(e);
  }
  return s;
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (Elem e = 0; e < universe; ++e) s.insert(e);
  return s;
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

bool Subset::subset_of(const Subset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

Subset Subset::complement() const {
  Subset out = full(universe_);
  out -= *this;
  return out;
}

Subset& Subset::operator|=(const Subset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::size_t Subset::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Elem e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

bool canonical_less(const Subset& a, const Subset& b) {
  auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  auto ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

void sort_canonical(std::vector<Subset>& subsets) { std::sort(subsets.begin(), subsets.end(), canonical_less); }

}  // namespace orelab
