#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/limits.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// A ring description such as `zmod(6)`, `gf(4)`, `matrix(gf(2),2)`,
/// `upper_triangular(gf(3),2)`, `product(gf(2),zmod(4))`,
/// `quotient(zmod(12),[4])` or `file(rings/t2.json)`.
struct RingSpec {
  enum class Kind { zmod, gf, matrix, upper_triangular, product, quotient, file };

  Kind kind = Kind::zmod;
  /// n for zmod, q for gf, k for matrix and upper_triangular.
  std::uint64_t size = 0;
  /// Base ring (matrix, upper_triangular, quotient) or factors (product).
  std::vector<RingSpec> args;
  /// Ideal generators for quotient.
  std::vector<Elem> generators;
  std::string path;

  /// Throws BadSpec.
  static RingSpec parse(std::string_view text);
  /// Normalized text; parse(s.to_string()) == s.
  std::string to_string() const;

  bool operator==(const RingSpec&) const = default;
};

/// Order of the ring the spec describes, computed without building it
/// (saturating; files are read). Quotients report their base order.
std::uint64_t spec_order(const RingSpec& spec);

/// Builds the ring. Throws SizeGuardExceeded if the order exceeds
/// limits.max_order, BadSpec for invalid parameters.
FiniteRing construct(const RingSpec& spec, const Limits& limits = {});
FiniteRing construct(std::string_view spec, const Limits& limits = {});

FiniteRing zmod(std::uint64_t n);
/// q in {2,3,4,5,7,8,9}. Element index is the coefficient vector c_0 + c_1 p + ...
/// of a polynomial in x modulo x^2+x+1 (q=4), x^3+x+1 (q=8) or x^2+1 (q=9).
FiniteRing galois_field(std::uint64_t q);
/// k x k matrices, row-major, first entry most significant.
FiniteRing matrix_ring(const FiniteRing& base, std::size_t k);
/// Upper triangular k x k matrices; the entries on and above the diagonal in
/// row-major order, first entry most significant.
FiniteRing upper_triangular_ring(const FiniteRing& base, std::size_t k);

/// Specs of the shipped test catalog.
std::vector<std::string> default_catalog();

/// Text manifest for batch runs:
///
///     # comment
///     analyses: profile, verify
///     output: reports
///     jobs: 4
///     zmod(6)
///     ring: product(gf(2),gf(3))
///
/// Lines without a known key are ring specs.
struct BatchManifest {
  std::vector<std::string> specs;
  std::vector<std::string> analyses{"profile"};
  std::filesystem::path output;
  unsigned jobs = 1;

  /// Throws ParseError(line, reason).
  static BatchManifest parse(std::string_view text);
  static BatchManifest load(const std::filesystem::path& path);
};

/// Analyses accepted in manifests.
const std::vector<std::string>& known_analyses();

}  // namespace orelab
