#pragma once

#include <map>
#include <optional>
#include <string>

#include "biquad/numeric.hpp"

namespace biquad {

/// One local check: place descriptor, the computed data (valuations,
/// residues, roots), and the outcome.
struct PlaceCertificate {
    std::string type;  // "infinite" | "odd" | "dyadic"
    std::optional<Int> p;
    std::string rule;
    std::map<std::string, std::string> data;
    bool pass = false;
};

}  // namespace biquad
