#pragma once

#include <nlohmann/json.hpp>

#include "orelab/report.hpp"

namespace orelab::docs {

using nlohmann::ordered_json;

ordered_json set_json(const Subset& s);
ordered_json profile_json(const LocalizationProfile& p);
ordered_json checks_json(const std::vector<TheoremCheck>& checks);
ordered_json info_json(const FiniteRing& r, const Limits& limits);
ordered_json sided_json(const SidedProfiles& s);

}  // namespace orelab::docs
