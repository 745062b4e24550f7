#pragma once

#include <json.hpp>

#include "biquad/decision.hpp"
#include "biquad/oracle.hpp"

namespace biquad {

/// Verdict as wire JSON: {"verdict": true|false|"unknown", "places": [...],
/// "witness": {...}?, "normalization": {...}}; rationals are "n/d" strings.
nlohmann::json verdict_to_json(const Verdict& v);

/// Reconstruct a verdict (field and elements included) from wire JSON;
/// inverse of verdict_to_json.
Verdict verdict_from_json(const nlohmann::json& j, const BiquadField& F);

nlohmann::json corpus_to_json(const CorpusReport& r);

/// Parse "n" or "n/d".
Rat parse_rat(const std::string& s);

std::array<Rat, 4> parse_coords(const std::string& csv);

}  // namespace biquad
