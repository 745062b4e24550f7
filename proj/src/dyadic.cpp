#include "biquad/dyadic.hpp"

#include <sstream>

namespace biquad {

std::string Zsqrt5::str() const {
    // print as u + v*sqrt(5) when the coordinates are integral there
    std::ostringstream os;
    if (n % 2 == 0) {
        Int v = n / 2, u = m + v;
        os << u;
        if (v != 0) os << (sgn(v) < 0 ? " - " : " + ") << abs(v) << "*sqrt(5)";
    } else {
        os << m << " + " << n << "*(1+sqrt(5))/2";
    }
    return os.str();
}

std::string EValue::str() const {
    if (!sqrt5) return t.get_str();
    if (t == 1) return "sqrt(5)";
    return t.get_str() + "*sqrt(5)";
}

DyadicCase dyadic_case(const BiquadField& F) {
    std::array<Int, 3> r = {mod_floor(F.a, 8), mod_floor(F.b, 8), mod_floor(F.c, 8)};
    std::vector<int> ones;
    for (int i = 0; i < 3; ++i)
        if (r[i] == 1) ones.push_back(i + 1);

    if (ones.empty()) return {DyadicKind::OnePlace, 0};
    if (ones.size() == 3) return {DyadicKind::CompletelySplit, 1};
    if (ones.size() != 1) throw Error("dyadic_case: impossible residue pattern (arithmetic bug)");

    int d = ones[0];
    std::array<Int, 2> rest;
    int j = 0;
    for (int i = 0; i < 3; ++i)
        if (i + 1 != d) rest[j++] = r[i];
    if (rest[0] != rest[1])
        throw Error("dyadic_case: companion radicands differ mod 8 (arithmetic bug)");
    if (rest[0] == 5) return {DyadicKind::SplitInert, d};
    return {DyadicKind::SplitRamified, d};
}

EValue e_approx(const Int& N, unsigned k, const FactorBudget& budget) {
    if (N == 0) throw ZeroElement("e_approx: N must be nonzero");
    if (k < 4) throw Error("e_approx: precision must be at least 4");
    auto [s, W] = squarefree_decompose(N, budget);
    if (mpz_even_p(W.get_mpz_t()) || mod_floor(W, 4) != 1)
        throw NotApplicable("e_approx: squarefree part must be odd and 1 mod 4");
    if (mod_floor(W, 8) == 1) return {false, s * sqrt_2adic(W, k), k};
    // W = 5 mod 8: e(W) = sqrt(5) * t with t^2 = W/5 (mod 2^k), t = 1 mod 4
    Int m = mod_pow2(W * inv_mod(5, pow2(k)), k);
    Int t = sqrt_2adic(m, k);
    if (mod_floor(t, 4) != 1) t = pow2(k - 1) - t;
    return {true, s * t, k};
}

Int find_A(const Int& a, const Int& gcd_bc, const EValue& eb, const EValue& ec) {
    if (eb.sqrt5 != ec.sqrt5)
        throw InconsistentEmbedding("find_A: product of images is irrational");
    Int prod = eb.sqrt5 ? Int(5 * eb.t * ec.t) : Int(eb.t * ec.t);
    if (mpz_even_p(gcd_bc.get_mpz_t())) throw InconsistentEmbedding("find_A: gcd must be odd");
    Int A = mod_floor(prod * inv_mod(gcd_bc, 16), 16);
    if (mpz_even_p(A.get_mpz_t()) || mod_floor(A * A - a, 16) != 0)
        throw InconsistentEmbedding("find_A: A^2 != a (mod 16)");
    return A;
}

namespace {

struct Pair {  // u + v*sqrt(5), coordinates exact integers (or residues mod 2^k)
    Int u, v;
    Pair mul(const Pair& o) const {
        return {u * o.u + 5 * v * o.v, u * o.v + v * o.u};
    }
};

// 2-adic valuation of a nonzero pair: half the valuation of the norm (2 is
// inert in Q_2(sqrt 5)). Returns -1 when the residue cannot resolve it.
long pair_v2(const Pair& p, unsigned k, bool exact) {
    Int nrm = p.u * p.u - 5 * p.v * p.v;
    if (nrm == 0) {
        if (p.u == 0 && p.v == 0) return exact ? -1 : -1;
        throw Error("pair_v2: norm vanished on nonzero pair (arithmetic bug)");
    }
    unsigned long t = v2(nrm);
    if (!exact && t + 6 > 2 * static_cast<unsigned long>(k)) return -1;  // too close to the precision edge
    if (t % 2 != 0) throw Error("pair_v2: odd norm valuation in an inert ring (arithmetic bug)");
    return static_cast<long>(t / 2);
}

struct EmbeddingData {
    Pair pa, pb, pc;  // images of sqrt(a), sqrt(b), sqrt(c)
    bool exact;
    bool sqrt5_ring;
};

EmbeddingData embedding_values(const BiquadField& F, unsigned k, const FactorBudget& budget = {}) {
    EValue Ea = e_approx(F.a, k, budget);
    EValue Eb = e_approx(F.b, k, budget);
    Pair pa = Ea.sqrt5 ? Pair{0, Ea.t} : Pair{Ea.t, 0};
    Pair pb = Eb.sqrt5 ? Pair{0, Eb.t} : Pair{Eb.t, 0};
    Pair prod = pa.mul(pb);
    EmbeddingData out;
    out.sqrt5_ring = Ea.sqrt5 || Eb.sqrt5;
    out.pa = pa;
    out.pb = pb;
    if (F.g == 1) {
        out.pc = prod;
        out.exact = true;
    } else {
        Int ig = inv_mod(F.g, pow2(k));
        out.pc = {mod_pow2(prod.u * ig, k), mod_pow2(prod.v * ig, k)};
        out.exact = false;
    }
    return out;
}

Pair substitute_at(const BiquadElem& S, const EmbeddingData& emb, int sa, int sb) {
    const Int s0 = S.s[0].get_num(), s1 = S.s[1].get_num();
    const Int s2 = S.s[2].get_num(), s3 = S.s[3].get_num();
    int sc = sa * sb;
    Pair n{s0 + sa * s1 * emb.pa.u + sb * s2 * emb.pb.u + sc * s3 * emb.pc.u,
           sa * s1 * emb.pa.v + sb * s2 * emb.pb.v + sc * s3 * emb.pc.v};
    return n;
}

struct Reduced {
    long f;
    Zsqrt5 unit;
    bool ok;  // false: escalate precision
};

Reduced reduce_value(const Pair& n, unsigned k, bool exact) {
    long f = pair_v2(n, k, exact);
    if (f < 0 || f + 3 > static_cast<long>(k)) return {0, {}, false};
    Zsqrt5 z = Zsqrt5::from_sqrt5_coords(n.u, n.v);
    Int pf = pow2(static_cast<unsigned>(f));
    if (!divides(pf, z.m) || !divides(pf, z.n))
        throw Error("reduce_value: unit part not integral (arithmetic bug)");
    unsigned kr = k - static_cast<unsigned>(f);
    return {f, {mod_pow2(z.m / pf, kr), mod_pow2(z.n / pf, kr)}, true};
}

constexpr unsigned kMaxPrecision = 256;

}  // namespace

Substitution substitute_residue(const BiquadElem& S, const DyadicCase& dc, unsigned k) {
    if (dc.kind != DyadicKind::SplitInert && dc.kind != DyadicKind::CompletelySplit)
        throw Error("substitute_residue: dyadic case has no residue substitution");
    if (!S.integral_coords()) throw Error("substitute_residue: coordinates must be integers");
    if (S.is_zero()) throw ZeroElement();

    for (unsigned prec = k; prec <= kMaxPrecision; prec += 8) {
        EmbeddingData emb = embedding_values(S.F, prec);
        Pair n = substitute_at(S, emb, 1, 1);
        if (dc.kind == DyadicKind::CompletelySplit && n.v != 0)
            throw Error("substitute_residue: irrational residue in the split case (arithmetic bug)");
        Reduced r = reduce_value(n, prec, emb.exact);
        if (!r.ok) continue;
        Substitution out;
        out.sqrt5_ring = dc.kind == DyadicKind::SplitInert;
        out.exact = emb.exact;
        out.value_u = n.u;
        out.value_v = n.v;
        out.f = r.f;
        out.unit = r.unit;
        out.k = prec;
        out.valuation_bound_exceeded = S.is_primitive() && r.f > 2;
        return out;
    }
    throw PrecisionExhausted("substitute_residue: valuation exceeds maximal precision");
}

bool unit_is_sum_q2(const Int& u) {
    if (mpz_even_p(u.get_mpz_t())) throw NotAUnit("unit_is_sum_q2: even argument");
    return mod_floor(u, 4) == 1;
}

bool unit_is_sum_q2sqrt5(const Zsqrt5& h) {
    if (!h.is_unit()) throw NotAUnit("unit_is_sum_q2sqrt5: even norm");
    // classes mod 4*O of 1, 3, (3+sqrt5)/2, (3-sqrt5)/2, (-3+sqrt5)/2, (-3-sqrt5)/2
    static const std::pair<int, int> classes[6] = {{1, 0}, {3, 0}, {1, 1}, {2, 3}, {2, 1}, {3, 3}};
    int m = static_cast<int>(mod_floor(h.m, 4).get_si());
    int n = static_cast<int>(mod_floor(h.n, 4).get_si());
    for (auto [cm, cn] : classes)
        if (m == cm && n == cn) return true;
    return false;
}

bool ramified_dyadic_test(const BiquadElem& S, const Int& V, long* f_out) {
    BiquadElem VS = S * Rat(V);
    for (int f = 4; f >= -2; --f) {
        Rat scale = f >= 0 ? Rat(1, pow2(static_cast<unsigned>(f))) : Rat(pow2(static_cast<unsigned>(-f)));
        BiquadElem cand = VS * scale;
        if (!is_integral(cand)) continue;
        // maximal f found; V*S = 2^f * cand, need cand = 2*S' + 1
        if (f_out) *f_out = f;
        BiquadElem odd = cand - BiquadElem::rational(S.F, 1);
        return is_integral(odd * Rat(1, 2));
    }
    return false;
}

PlaceCertificate dyadic_test(const BiquadElem& S, const Int& V, unsigned k) {
    PlaceCertificate cert;
    cert.type = "dyadic";
    cert.p = Int(2);
    DyadicCase dc = dyadic_case(S.F);
    switch (dc.kind) {
        case DyadicKind::OnePlace:
            cert.rule = "single dyadic place: pass by reciprocity";
            cert.data["case"] = "one-place";
            cert.pass = true;
            return cert;
        case DyadicKind::SplitRamified: {
            cert.rule = "split-ramified: V*S = 2^f*(2*S'+1) with S' integral";
            cert.data["case"] = "split-ramified";
            long f = 0;
            cert.pass = ramified_dyadic_test(S, V, &f);
            cert.data["f"] = std::to_string(f);
            return cert;
        }
        case DyadicKind::SplitInert:
        case DyadicKind::CompletelySplit: {
            Substitution sub = substitute_residue(S, dc, k);
            cert.data["case"] = dc.kind == DyadicKind::SplitInert ? "split-inert" : "completely-split";
            cert.data["f"] = std::to_string(sub.f);
            cert.data["substituted"] =
                Zsqrt5::from_sqrt5_coords(sub.value_u, sub.value_v).str() + (sub.exact ? "" : " (mod 2^" + std::to_string(sub.k) + ")");
            if (sub.valuation_bound_exceeded) cert.data["valuation_note"] = "f exceeds 2 on primitive input";
            Zsqrt5 h = Zsqrt5::integer(V) * sub.unit;
            if (dc.kind == DyadicKind::SplitInert) {
                cert.rule = "split-inert: V*S'' lies in a sum-of-two-squares class of Q2(sqrt5) mod 4O";
                cert.data["residue"] = h.str();
                cert.pass = unit_is_sum_q2sqrt5(h);
            } else {
                cert.rule = "completely-split: odd part of V*S'' is 1 mod 4";
                cert.data["residue"] = mod_floor(h.m, 8).get_str() + " (mod 8)";
                cert.pass = unit_is_sum_q2(h.m);
            }
            return cert;
        }
    }
    throw Error("dyadic_test: unreachable");
}

std::vector<int> dyadic_crosscheck(const BiquadElem& S, const Int& V, unsigned k) {
    DyadicCase dc = dyadic_case(S.F);
    if (dc.kind != DyadicKind::SplitInert && dc.kind != DyadicKind::CompletelySplit)
        throw NotApplicable("dyadic_crosscheck: requires a substitution case");
    if (!S.integral_coords() || S.is_zero()) throw Error("dyadic_crosscheck: bad element");

    for (unsigned prec = k; prec <= kMaxPrecision; prec += 8) {
        EmbeddingData emb = embedding_values(S.F, prec);
        int sym[2][2];
        bool ok = true;
        for (int ia = 0; ia < 2 && ok; ++ia) {
            for (int ib = 0; ib < 2 && ok; ++ib) {
                Pair n = substitute_at(S, emb, ia ? -1 : 1, ib ? -1 : 1);
                Reduced r = reduce_value(n, prec, emb.exact);
                if (!r.ok) {
                    ok = false;
                    break;
                }
                Zsqrt5 h = Zsqrt5::integer(V) * r.unit;
                bool pass = dc.kind == DyadicKind::SplitInert ? unit_is_sum_q2sqrt5(h)
                                                              : unit_is_sum_q2(h.m);
                sym[ia][ib] = pass ? 1 : -1;
            }
        }
        if (!ok) continue;

        if (dc.kind == DyadicKind::CompletelySplit)
            return {sym[0][0], sym[0][1], sym[1][0], sym[1][1]};

        // conjugation flips the sign of every sqrt(5)-valued image; embeddings
        // in the same orbit view the same place and must agree
        int chi_a = mod_floor(S.F.a, 8) == 5 ? 1 : 0;  // 1: sign flipped by conjugation
        int chi_b = mod_floor(S.F.b, 8) == 5 ? 1 : 0;
        std::vector<int> out;
        bool seen[2][2] = {};
        for (int ia = 0; ia < 2; ++ia)
            for (int ib = 0; ib < 2; ++ib) {
                if (seen[ia][ib]) continue;
                int ja = ia ^ chi_a, jb = ib ^ chi_b;
                seen[ia][ib] = seen[ja][jb] = true;
                if (sym[ia][ib] != sym[ja][jb])
                    throw Error("dyadic_crosscheck: conjugate embeddings disagree (arithmetic bug)");
                out.push_back(sym[ia][ib]);
            }
        return out;
    }
    throw PrecisionExhausted("dyadic_crosscheck: valuation exceeds maximal precision");
}

}  // namespace biquad
