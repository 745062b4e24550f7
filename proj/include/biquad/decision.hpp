#pragma once

#include <optional>
#include <vector>

#include "biquad/certificate.hpp"
#include "biquad/dyadic.hpp"
#include "biquad/field.hpp"
#include "biquad/odd_places.hpp"

namespace biquad {

/// T = Q^2 * U * V * S0 with S0 primitive, U the product of the distinct
/// primes = 1, 2 (mod 4) and V of those = 3 (mod 4) in the content; any sign
/// is folded into S0.
struct Normalization {
    Rat Q;
    Int U = 1, V = 1;
    std::vector<Int> v_primes;
    BiquadElem S0;
};

Normalization normalize(const BiquadElem& T, const FactorBudget& budget = {});

enum class Tri { Yes, No, Unknown };

struct Verdict {
    Tri is_sum = Tri::Unknown;
    std::vector<PlaceCertificate> places;
    std::optional<std::pair<BiquadElem, BiquadElem>> witness;
    bool incomplete = false;  // factorization budget ran out somewhere
    std::optional<Normalization> normalization;
};

/// Local-global decision for a primitive S twisted by a squarefree V of
/// primes = 3 (mod 4); V = 1 is the plain primitive case. Places are
/// evaluated in the order infinite, odd, dyadic: the single-dyadic-place
/// shortcut is only sound once everything before it passed.
Verdict decide_primitive(const BiquadElem& S0, const Int& V, const FactorBudget& budget = {});

/// Full decision for an arbitrary nonzero element with rational coordinates
/// (zero decides true). Q and U are symbol-neutral and discarded after
/// normalization.
Verdict decide(const BiquadElem& T, const FactorBudget& budget = {});

/// Human-readable certificate dump, one line per place.
std::string explain(const Verdict& v);

}  // namespace biquad
