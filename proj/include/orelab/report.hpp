#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orelab/limits.hpp"
#include "orelab/localize.hpp"
#include "orelab/maxden.hpp"
#include "orelab/theorems.hpp"

namespace orelab {

/// Text is for people; json emits the structured documents. Element sets are
/// always sorted index arrays.
enum class Format { text, json };

/// Throws std::invalid_argument.
Format parse_format(std::string_view name);

std::string render_info(const FiniteRing& r, Format f, const Limits& limits = {});
std::string render_axioms(const FiniteRing& r, Format f);
std::string render_ore(const OreReport& report, Format f);
/// Includes the quotient-model check.
std::string render_fraction(const FractionRing& fr, Format f);
std::string render_profile(const LocalizationProfile& p, Format f);
std::string render_sided(const SidedProfiles& s, Format f);
std::string render_checks(const std::vector<TheoremCheck>& checks, Format f);

}  // namespace orelab
