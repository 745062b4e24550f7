#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biquad/decision.hpp"
#include "biquad/field.hpp"

namespace biquad {

/// Bounded brute-force search box: first coordinates of x run over
/// numerator/denominator_bound with |numerator| <= height; the matching y is
/// recovered by exact square-root extraction and may fall outside the box.
struct SearchParams {
    long height = 5;
    int denominator_bound = 4;  // 1, 2 or 4
    unsigned threads = 0;       // 0: use hardware concurrency
};

/// Exact check x^2 + y^2 = S.
bool verify_witness(const BiquadElem& S, const BiquadElem& x, const BiquadElem& y);

/// Exact square root in the tower, if z is a square. Splits z = Z1 + Z2*sqrt(b)
/// over Q(sqrt a) and solves the two-coordinate system via quadratic-subfield
/// square roots; quartic search never happens.
std::optional<BiquadElem> sqrt_element(const BiquadElem& z);

/// Deterministic lexicographic search for x^2 + y^2 = S. The returned pair is
/// sign-normalized and ordered, so identical parameters reproduce identical
/// results; a witness found at some height is found at every larger one.
std::optional<std::pair<BiquadElem, BiquadElem>> find_witness(const BiquadElem& S,
                                                              const SearchParams& params);

struct CorpusIssue {
    std::string kind;  // "fatal" | "reciprocity" | "v_scaling"
    std::string field;
    std::string element;
    std::string detail;
};

struct CorpusReport {
    long total = 0;
    long skipped_incomplete = 0;
    long decided_true = 0;
    long decided_false = 0;
    long witnesses_found = 0;
    long true_without_witness = 0;   // informational: witness may exceed the box
    long fatal_contradictions = 0;   // witness exists but decide said no
    long reciprocity_checked = 0;
    long reciprocity_failures = 0;
    long dyadic_shortcut_checked = 0;
    long dyadic_shortcut_divergences = 0;  // single substitution vs all embeddings
    long ramified_arbitration_checked = 0;
    long ramified_closed_form_disagreements = 0;  // subtraction form vs norm form
    std::string ramified_disagreement_instance;
    long v_scaling_checked = 0;
    long v_scaling_mismatches = 0;
    std::vector<CorpusIssue> issues;

    bool fatal() const { return fatal_contradictions > 0; }
};

/// Generate `count` random primitive elements per field with coordinates in
/// [-bound, bound], decide each, hunt for witnesses, and cross-validate:
/// verdicts against witnesses, symbol products against reciprocity, the
/// ramified-valuation closed form against the norm form, and the odd-place
/// tests against V-scaling at ramified primes.
CorpusReport corpus_crosscheck(const std::vector<std::pair<Int, Int>>& fields, long bound,
                               long count, unsigned long seed, const SearchParams& params);

}  // namespace biquad
