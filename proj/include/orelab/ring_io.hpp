#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orelab/ring.hpp"

namespace orelab {

/// Ring file text: a JSON document with fields order, one, zero, add, mul and
/// optionally names, written in that order with one table row per line.
std::string ring_to_text(const FiniteRing& r);
/// Throws ParseError(line, reason) on malformed text and AxiomViolation on bad tables.
FiniteRing ring_from_text(std::string_view text);

FiniteRing load_ring_file(const std::filesystem::path& path);
void save_ring_file(const FiniteRing& r, const std::filesystem::path& path);

/// The ring text without names; the input of canonical_hash.
std::string canonical_form(const FiniteRing& r);
/// 64-bit FNV-1a of the canonical form as 16 lowercase hex digits. Table-level:
/// isomorphic rings with different tables hash differently.
std::string canonical_hash(const FiniteRing& r);

}  // namespace orelab
