#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orelab/errors.hpp"

namespace orelab {

/// A subset of the carrier {0..n-1} of a finite ring, stored as a bitmask.
///
/// Used for multiplicative sets, ideals and every element class. Lists of
/// subsets are ordered by `canonical_less`: size first, then the sorted
/// element lists lexicographically.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Subset of(std::size_t universe, std::span<const Elem> elems);
  static Subset of(std::size_t universe, std::initializer_list<Elem> elems) {
    return of(universe, std::span<const Elem>(elems.begin(), elems.size()));
  }
  static Subset full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Elem e) const noexcept { return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u); }
  void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::vector<Elem> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Elem>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  bool subset_of(const Subset& other) const noexcept;
  bool intersects(const Subset& other) const noexcept;
  Subset complement() const;

  Subset& operator|=(const Subset& o) noexcept;
  Subset& operator&=(const Subset& o) noexcept;
  Subset& operator-=(const Subset& o) noexcept;
  friend Subset operator|(Subset a, const Subset& b) noexcept { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) noexcept { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) noexcept { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) noexcept = default;

  std::size_t hash() const noexcept;
  /// "{0,2,4}"
  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Deterministic report ordering: by size, then lexicographically on sorted elements.
bool canonical_less(const Subset& a, const Subset& b);

void sort_canonical(std::vector<Subset>& subsets);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace orelab
