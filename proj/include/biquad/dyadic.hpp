#pragma once

#include <vector>

#include "biquad/certificate.hpp"
#include "biquad/field.hpp"

namespace biquad {

enum class DyadicKind {
    OnePlace,        // none of a, b, c is 1 mod 8: a single dyadic place
    SplitRamified,   // one radicand 1 mod 8, the others not 1 mod 4
    SplitInert,      // one radicand 1 mod 8, the others 5 mod 8
    CompletelySplit  // all three radicands 1 mod 8
};

struct DyadicCase {
    DyadicKind kind;
    int one_index = 0;  // subfield index (1..3) of a radicand = 1 mod 8, 0 if none
};

/// Dispatch on the residues of a, b, c mod 8. At most one radicand class can
/// be 1 mod 8 unless all three are: the two non-distinguished radicands are
/// always congruent mod 8.
DyadicCase dyadic_case(const BiquadField& F);

/// Residue of a 2-adic integer of Q_2(sqrt 5), coordinates over the maximal
/// order basis {1, w}, w = (1+sqrt5)/2 (w^2 = w + 1). An element u + v*sqrt5
/// has (m, n) = (u - v, 2v). Congruence mod 4*O is componentwise mod 4.
struct Zsqrt5 {
    Int m, n;

    static Zsqrt5 from_sqrt5_coords(const Int& u, const Int& v) { return {u - v, 2 * v}; }
    static Zsqrt5 integer(const Int& u) { return {u, 0}; }

    bool is_rational() const { return n == 0; }
    Int norm() const { return m * m + m * n - n * n; }
    bool is_unit() const { return mpz_odd_p(norm().get_mpz_t()) != 0; }

    Zsqrt5 operator*(const Zsqrt5& o) const {
        return {m * o.m + n * o.n, m * o.n + n * o.m + n * o.n};
    }
    Zsqrt5 operator+(const Zsqrt5& o) const { return {m + o.m, n + o.n}; }
    bool operator==(const Zsqrt5& o) const { return m == o.m && n == o.n; }

    std::string str() const;
};

/// 2-adic approximation e(N) of sqrt(N), N = s^2*W with W squarefree = 1 mod 4.
/// For W = 1 mod 8 this is the canonical integer root of W mod 2^k times s;
/// for W = 5 mod 8 it is sqrt(5) times s*t, t the root of W/5 mod 2^k
/// normalized to t = 1 mod 4. Throws NotApplicable when W is even or 3 mod 4.
struct EValue {
    bool sqrt5;  // value is t * sqrt(5) when set, else the integer t
    Int t;
    unsigned k;  // residue precision

    Zsqrt5 to_residue() const {
        return sqrt5 ? Zsqrt5::from_sqrt5_coords(0, t) : Zsqrt5::integer(t);
    }
    std::string str() const;
};

EValue e_approx(const Int& N, unsigned k = 8, const FactorBudget& budget = {});

/// Odd residue A mod 16 with A * gcd_bc = eb*ec (mod 16) and A^2 = a (mod 16),
/// the image of the remaining square root once two of them are fixed. The two
/// companion radicands are necessarily distinct (equal ones would collapse the
/// field). Throws InconsistentEmbedding when the congruences have no solution.
Int find_A(const Int& a, const Int& gcd_bc, const EValue& eb, const EValue& ec);

/// Substituted residue of S under the canonical dyadic embedding
/// sqrt(a) -> e(a), sqrt(b) -> e(b), sqrt(c) -> e(a)e(b)/g, which keeps the
/// three images multiplicatively consistent. `exact` is set when g = 1 and the
/// substituted value is the exact integer combination (no reduction mod 2^k).
struct Substitution {
    bool sqrt5_ring;       // value lives in Q_2(sqrt 5) rather than Q_2
    bool exact;            // value below is exact, not a mod-2^k residue
    Int value_u, value_v;  // substituted value as u + v*sqrt(5)
    long f;                // its 2-adic valuation
    Zsqrt5 unit;           // value / 2^f, reduced mod 2^(k-f)
    unsigned k;            // working precision actually used
    bool valuation_bound_exceeded;  // f > 2 on primitive input
};

Substitution substitute_residue(const BiquadElem& S, const DyadicCase& dc, unsigned k = 8);

/// A unit of Z_2 is a sum of two squares iff it is 1 mod 4.
bool unit_is_sum_q2(const Int& u);

/// A unit of Q_2(sqrt 5) is a sum of two squares iff its class mod 4*O is one
/// of 1, 3, (+-3 +- sqrt5)/2. Throws NotAUnit on even norm.
bool unit_is_sum_q2sqrt5(const Zsqrt5& h);

/// Split-ramified dyadic condition: V*S = 2^f * (2*S' + 1) for some algebraic
/// integer S'. Searches the maximal f in [-2, 4] with V*S/2^f integral, then
/// tests integrality of (V*S/2^f - 1)/2. `f_out`, when given, receives f.
bool ramified_dyadic_test(const BiquadElem& S, const Int& V, long* f_out = nullptr);

/// Full dyadic place check for a primitive S twisted by V. The OnePlace
/// shortcut is only valid once every infinite and odd place has passed;
/// the caller is responsible for the evaluation order.
PlaceCertificate dyadic_test(const BiquadElem& S, const Int& V, unsigned k = 8);

/// Independent check: evaluates the symbol at every dyadic place via all
/// sign-consistent embeddings (conjugate embeddings are verified to agree and
/// reported once per place). Returns +1/-1 per place.
std::vector<int> dyadic_crosscheck(const BiquadElem& S, const Int& V, unsigned k = 16);

}  // namespace biquad
