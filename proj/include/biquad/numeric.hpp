#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace biquad {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define BIQUAD_ERROR(Name, default_msg)                                  \
    class Name : public Error {                                          \
    public:                                                              \
        Name() : Error(default_msg) {}                                   \
        explicit Name(const std::string& msg) : Error(msg) {}            \
    }

BIQUAD_ERROR(DegenerateField, "degenerate field: ab is a square or a radicand is 0 or 1");
BIQUAD_ERROR(ZeroElement, "operation undefined for the zero element");
BIQUAD_ERROR(NotARealField, "field has a complex embedding");
BIQUAD_ERROR(NotAResidue, "not a quadratic residue");
BIQUAD_ERROR(NotA2adicSquare, "not a 2-adic square (argument must be 1 mod 8)");
BIQUAD_ERROR(NotAUnit, "not a unit (even norm)");
BIQUAD_ERROR(NotApplicable, "operation not applicable to this input");
BIQUAD_ERROR(IncompleteFactorization, "factorization budget exhausted");
BIQUAD_ERROR(PrecisionExhausted, "2-adic working precision exhausted");
BIQUAD_ERROR(InconsistentEmbedding, "no residue satisfies the embedding congruences");

#undef BIQUAD_ERROR

/// Floor remainder: result in [0, m) for m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int mod_pow2(const Int& x, unsigned k) {
    Int r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

inline Int pow2(unsigned k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

/// 2-adic valuation of a nonzero integer.
inline unsigned long v2(const Int& x) {
    return mpz_scan1(x.get_mpz_t(), 0);
}

inline bool divides(const Int& d, const Int& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rat> sqrt_exact(const Rat& q);

/// Modular inverse; the modulus must be coprime to x.
Int inv_mod(const Int& x, const Int& m);

}  // namespace biquad
