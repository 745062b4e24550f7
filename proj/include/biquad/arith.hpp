#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "biquad/numeric.hpp"

namespace biquad {

/// Effort bound for factorization. Trial division runs over primes up to
/// `trial_limit`; remaining composite cofactors get Pollard-Brent rounds,
/// `rho_rounds` iterations in total, seeded deterministically.
struct FactorBudget {
    unsigned long trial_limit = 1'000'000;
    unsigned long rho_rounds = 4'000'000;
    unsigned long seed = 1;
};

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes increasing
    Int cofactor = 1;                               // 1 iff complete
    bool complete = true;

    /// sign * prod(p^e) * cofactor; equals the factored input.
    Int reassemble() const;
};

/// Deterministic below 2^64 (fixed Miller-Rabin base set, proven far beyond
/// that range); strong probable-prime test above.
bool is_prime(const Int& n);

/// Factor a nonzero integer within the budget. Never wrong: factors that
/// could not be certified within budget stay in `cofactor` with
/// complete = false.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

/// n = s^2 * m with m squarefree, sign(m) = sign(n).
/// Throws IncompleteFactorization if the budget runs out.
std::pair<Int, Int> squarefree_decompose(const Int& n, const FactorBudget& budget = {});

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);

/// Square root of a mod an odd prime p, canonical representative in
/// [0, (p-1)/2]. Throws NotAResidue when (a/p) = -1.
Int sqrt_mod_p(const Int& a, const Int& p);

/// Odd E with E^2 = n (mod 2^k) for n = 1 (mod 8), k >= 3; canonical
/// representative in [1, 2^(k-2) - 1]. Throws NotA2adicSquare otherwise.
Int sqrt_2adic(const Int& n, unsigned k);

/// Exact exponent of p in a nonzero integer.
long v_p(const Int& n, const Int& p);

/// Exact exponent of p in a nonzero rational (may be negative).
long v_p(const Rat& q, const Int& p);

}  // namespace biquad
