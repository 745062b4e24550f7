#include "biquad/odd_places.hpp"

namespace biquad {

OddPlacePattern classify_odd_place(const BiquadField& F, const Int& p) {
    if (mod_floor(p, 4) != 3) throw Error("classify_odd_place: p must be 3 mod 4");
    OddPlacePattern pat;
    pat.p = p;
    pat.symbols = {legendre(F.a, p), legendre(F.b, p), legendre(F.c, p)};

    int zeros = 0;
    for (int s : pat.symbols) zeros += (s == 0);

    if (zeros == 0) {
        if (pat.symbols[0] * pat.symbols[1] != pat.symbols[2])
            throw Error("classify_odd_place: symbol product relation violated (arithmetic bug)");
        if (pat.symbols == std::array<int, 3>{1, 1, 1}) {
            pat.kind = OddPlacePattern::Kind::CompletelySplit;
            pat.A = sqrt_mod_p(F.a, p);
            pat.B = sqrt_mod_p(F.b, p);
            // pick the root of c compatible with the tower: C*g = A*B (mod p)
            pat.C = mod_floor(pat.A * pat.B * inv_mod(F.g, p), p);
            if (mod_floor(pat.C * pat.C - F.c, p) != 0)
                throw Error("classify_odd_place: incompatible roots (arithmetic bug)");
        } else {
            // an arrangement of (-1,-1,+1): some unit radicand is a nonresidue,
            // and for p = 3 mod 4 that makes sqrt(-1) local
            pat.kind = OddPlacePattern::Kind::AutoPass;
        }
        return pat;
    }

    if (zeros != 2) throw Error("classify_odd_place: p^2 divides a radicand (not squarefree)");
    int split = 0;
    for (int i = 0; i < 3; ++i)
        if (pat.symbols[i] != 0) split = i + 1;
    if (pat.symbols[split - 1] == 1) {
        pat.kind = OddPlacePattern::Kind::RamifiedSplit;
        pat.split_index = split;
        pat.C = sqrt_mod_p(F.radicand(split), p);
    } else {
        // third radicand is a nonresidue: the completions contain sqrt(-1)
        pat.kind = OddPlacePattern::Kind::AutoPass;
    }
    return pat;
}

bool minus_one_is_sum(const BiquadField& F) {
    bool imaginary = !F.real();
    if (!imaginary) return false;
    bool two_splits = mod_floor(F.a, 8) == 1 && mod_floor(F.b, 8) == 1;
    return !two_splits;
}

bool rational_prime_is_sum(const Int& q, const BiquadField& F) {
    if (mod_floor(q, 4) != 3 || !is_prime(q)) throw Error("rational_prime_is_sum: q must be a prime 3 mod 4");
    if (divides(q, F.a * F.b * F.c)) throw NotApplicable("rational_prime_is_sum: q divides abc");
    if (legendre(F.a, q) == 1 && legendre(F.b, q) == 1) return false;
    if (mod_floor(F.a, 8) == 1 && mod_floor(F.b, 8) == 1) return false;
    return true;
}

namespace {

// valuation at the ideal (p, sqrt(d) - root) of F_i, with T integral
long val_at(const QuadElem& T, const Int& p, const Int& root) { return val_split(T, p, root); }

}  // namespace

std::array<long, 4> odd_split_values(const BiquadElem& S, const OddPlacePattern& pat) {
    if (pat.kind != OddPlacePattern::Kind::CompletelySplit)
        throw Error("odd_split_values: pattern is not completely split");
    if (S.is_zero()) throw ZeroElement();
    const Int& p = pat.p;
    QuadElem T1 = subfield_product(S, 1);
    QuadElem T2 = subfield_product(S, 2);
    QuadElem T3 = subfield_product(S, 3);
    if (T1.is_zero() || T2.is_zero() || T3.is_zero())
        throw Error("odd_split_values: vanishing subfield product (arithmetic bug)");

    // sigma_1(S)sigma_2(S) is the F_3-conjugate of T3, so its valuation at
    // (p, sqrt(c) -+ C) is that of T3 at the conjugate ideal (p, sqrt(c) +- C).
    long t1p = val_at(T1, p, pat.A), t1m = val_at(T1, p, p - pat.A);
    long t2p = val_at(T2, p, pat.B), t2m = val_at(T2, p, p - pat.B);
    long u3p = val_at(T3, p, pat.C), u3m = val_at(T3, p, p - pat.C);

    std::array<long, 4> vals = {
        t1p + t2p - u3m,
        t1p + t2m - u3p,
        t1m + t2p - u3p,
        t1m + t2m - u3m,
    };
    for (long v : vals)
        if (v < 0 || v % 2 != 0) throw Error("odd_split_values: odd or negative value (arithmetic bug)");
    return vals;
}

bool odd_split_test(const std::array<long, 4>& values, bool p_divides_V) {
    int want = p_divides_V ? 2 : 0;
    for (long v : values)
        if (((v % 4) + 4) % 4 != want) return false;
    return true;
}

std::array<long, 2> odd_ramified_values(const BiquadElem& S, const OddPlacePattern& pat) {
    if (pat.kind != OddPlacePattern::Kind::RamifiedSplit)
        throw Error("odd_ramified_values: pattern is not ramified-split");
    if (S.is_zero()) throw ZeroElement();
    const Int& p = pat.p;
    int k = pat.split_index;
    int i = (k == 1) ? 2 : 1;
    int j = (k == 3) ? 2 : 3;
    QuadElem Ti = subfield_product(S, i);
    QuadElem Tj = subfield_product(S, j);
    QuadElem Tk = subfield_product(S, k);
    if (Ti.is_zero() || Tj.is_zero() || Tk.is_zero())
        throw Error("odd_ramified_values: vanishing subfield product (arithmetic bug)");

    long ram = val_ramified(Ti, p) + val_ramified(Tj, p);
    long u3p = val_at(Tk, p, pat.C), u3m = val_at(Tk, p, p - pat.C);
    std::array<long, 2> vals = {ram - 2 * u3m, ram - 2 * u3p};
    for (long v : vals)
        if (v < 0 || v % 2 != 0) throw Error("odd_ramified_values: odd or negative value (arithmetic bug)");
    return vals;
}

bool odd_ramified_test(const std::array<long, 2>& values) {
    for (long v : values)
        if (((v % 4) + 4) % 4 != 0) return false;
    return true;
}

}  // namespace biquad
