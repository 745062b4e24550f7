#pragma once

// Test-only arbitration oracle: prime-ideal valuations in quadratic orders
// computed by explicit ideal-power membership over the maximal order,
// independent of the library's substitution-based algorithms.

#include <utility>
#include <vector>

#include "biquad/quad.hpp"

namespace biquad::testing {

/// Maximal order of Q(sqrt d): basis {1, w} with w^2 = t*w + n
/// (w = sqrt d when d = 2,3 mod 4; w = (1+sqrt d)/2 when d = 1 mod 4).
struct QuadOrder {
    Int d, t, n;
    bool half;

    static QuadOrder of(const Int& d);
    /// coordinates of x + y*sqrt(d) in the order basis
    std::pair<Int, Int> coords(const Int& x, const Int& y) const;
};

/// Z-module with basis {(a, 0), (b, c)} in order coordinates; full-rank HNF.
struct IdealHNF {
    Int a, b, c;
};

IdealHNF ideal_from_generators(const QuadOrder& O, const std::vector<std::pair<Int, Int>>& gens);
IdealHNF ideal_mul(const QuadOrder& O, const IdealHNF& I, const IdealHNF& J);
bool ideal_contains(const IdealHNF& I, const std::pair<Int, Int>& v);

/// max k <= max_k with elem in P^k
long ideal_valuation(const QuadOrder& O, const IdealHNF& P, const std::pair<Int, Int>& elem,
                     long max_k = 64);

/// Valuation of x + y*sqrt(d) at the ideal (p, sqrt(d) - root) (split p) by
/// raw membership.
long oracle_val_split(const Int& d, const Int& p, const Int& root, const Int& x, const Int& y);

/// Valuation at (p, sqrt(d)) for p | d by raw membership.
long oracle_val_ramified(const Int& d, const Int& p, const Int& x, const Int& y);

}  // namespace biquad::testing
