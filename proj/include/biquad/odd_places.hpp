#pragma once

#include <array>

#include "biquad/field.hpp"

namespace biquad {

/// Local pattern at an odd prime p = 3 (mod 4). For any such p either
/// p does not divide abc (and the three Legendre symbols multiply to +1),
/// or p divides exactly two of {a, b, c}.
struct OddPlacePattern {
    enum class Kind {
        CompletelySplit,  // (a/p) = (b/p) = (c/p) = +1: four places over p
        RamifiedSplit,    // p divides two radicands, third has symbol +1: two places
        AutoPass,         // every completion contains a square root of -1
    };

    Int p;
    Kind kind;
    std::array<int, 3> symbols;  // Legendre symbols of (a, b, c); 0 where p divides

    // CompletelySplit: compatible roots, C*g = A*B (mod p).
    Int A, B, C;
    // RamifiedSplit: the subfield index (1..3) whose radicand has symbol +1,
    // with C its root mod p.
    int split_index = 0;
};

OddPlacePattern classify_odd_place(const BiquadField& F, const Int& p);

/// Whether -1 is a sum of two squares in F: true iff F is imaginary and 2
/// does not split completely (i.e. not all of a, b, c are 1 mod 8).
bool minus_one_is_sum(const BiquadField& F);

/// Whether a rational prime q = 3 (mod 4) with q not dividing abc is a sum of
/// two squares in F: it is, unless (a/q) = (b/q) = +1 or all radicands are
/// 1 mod 8. Throws NotApplicable when q | abc.
bool rational_prime_is_sum(const Int& q, const BiquadField& F);

/// The four combinations of subfield-product valuations at a completely split
/// p; the j-th equals 2*v_{P_j}(S) over the four primes P_j of F above p.
std::array<long, 4> odd_split_values(const BiquadElem& S, const OddPlacePattern& pat);

/// Completely split local condition: with p not dividing V all four values
/// must be 0 mod 4; with p | V all four must be 2 mod 4.
bool odd_split_test(const std::array<long, 4>& values, bool p_divides_V);

/// The two combinations for the ramified-split pattern; the i-th equals
/// 2*v_{P_i}(S) over the two primes of F above p.
std::array<long, 2> odd_ramified_values(const BiquadElem& S, const OddPlacePattern& pat);

/// Ramified local condition: both values 0 mod 4. Unchanged by V-scaling,
/// since v_P(V) is even at ramified places.
bool odd_ramified_test(const std::array<long, 2>& values);

}  // namespace biquad
