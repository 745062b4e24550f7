#include "biquad/decision.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace biquad {

Normalization normalize(const BiquadElem& T, const FactorBudget& budget) {
    auto [q, S0] = content_split(T);  // q > 0, sign lives in S0
    Normalization out{Rat(1), 1, 1, {}, S0};

    std::map<Int, long> exps;
    Factorization fn = factorize(Int(q.get_num()), budget);
    if (!fn.complete) throw IncompleteFactorization("normalize: content not factored");
    for (const auto& [p, e] : fn.factors) exps[p] += e;
    if (q.get_den() != 1) {
        Factorization fd = factorize(Int(q.get_den()), budget);
        if (!fd.complete) throw IncompleteFactorization("normalize: content not factored");
        for (const auto& [p, e] : fd.factors) exps[p] -= e;
    }

    for (const auto& [p, e] : exps) {
        long half = e >= 0 ? e / 2 : (e - 1) / 2;  // floor
        int rest = static_cast<int>(e - 2 * half);
        Int ppow;
        mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(half >= 0 ? half : -half));
        out.Q *= half >= 0 ? Rat(ppow) : Rat(1, ppow);
        if (rest == 1) {
            if (mod_floor(p, 4) == 3) {
                out.V *= p;
                out.v_primes.push_back(p);
            } else {
                out.U *= p;
            }
        }
    }
    if (out.Q * out.Q * Rat(out.U) * Rat(out.V) != q)
        throw Error("normalize: decomposition mismatch (arithmetic bug)");
    return out;
}

namespace {

PlaceCertificate infinite_certificate(const BiquadElem& S0) {
    PlaceCertificate cert;
    cert.type = "infinite";
    if (!S0.F.real()) {
        cert.rule = "imaginary field: no real embeddings";
        cert.pass = true;
        return cert;
    }
    cert.rule = "real field: totally positive";
    bool tp = is_totally_positive(S0);
    std::ostringstream signs;
    for (int sa : {1, -1})
        for (int sb : {1, -1}) signs << (sign_at_embedding(S0, sa, sb) > 0 ? "+" : "-");
    cert.data["embedding_signs"] = signs.str();
    cert.pass = tp;
    return cert;
}

std::string join_longs(const long* v, int n) {
    std::ostringstream os;
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

PlaceCertificate odd_certificate(const BiquadElem& S0, const Int& p, bool p_in_V) {
    PlaceCertificate cert;
    cert.type = "odd";
    cert.p = p;
    OddPlacePattern pat = classify_odd_place(S0.F, p);
    std::ostringstream sym;
    sym << "(" << pat.symbols[0] << "," << pat.symbols[1] << "," << pat.symbols[2] << ")";
    cert.data["symbols"] = sym.str();
    if (p_in_V) cert.data["divides_V"] = "true";
    switch (pat.kind) {
        case OddPlacePattern::Kind::AutoPass:
            cert.rule = "auto-pass: completions contain Q_p(sqrt(-1))";
            cert.pass = true;
            return cert;
        case OddPlacePattern::Kind::CompletelySplit: {
            auto vals = odd_split_values(S0, pat);
            cert.rule = p_in_V ? "completely split: all four valuation sums 2 mod 4 (p | V)"
                               : "completely split: all four valuation sums 0 mod 4";
            cert.data["values"] = join_longs(vals.data(), 4);
            cert.data["roots"] = pat.A.get_str() + "," + pat.B.get_str() + "," + pat.C.get_str();
            cert.pass = odd_split_test(vals, p_in_V);
            return cert;
        }
        case OddPlacePattern::Kind::RamifiedSplit: {
            auto vals = odd_ramified_values(S0, pat);
            cert.rule = "ramified pair: both valuation sums 0 mod 4";
            cert.data["values"] = join_longs(vals.data(), 2);
            cert.data["split_subfield"] = std::to_string(pat.split_index);
            cert.pass = odd_ramified_test(vals);
            return cert;
        }
    }
    throw Error("odd_certificate: unreachable");
}

}  // namespace

Verdict decide_primitive(const BiquadElem& S0, const Int& V, const FactorBudget& budget) {
    if (!S0.is_primitive()) throw Error("decide_primitive: element must be primitive");
    Verdict v;
    bool all_pass = true;

    v.places.push_back(infinite_certificate(S0));
    all_pass &= v.places.back().pass;

    Rat nrm = norm_total(S0);
    if (nrm.get_den() != 1) throw Error("decide_primitive: integral element has rational norm");
    Int N = nrm.get_num();
    if (N == 0) throw Error("decide_primitive: zero norm for nonzero element");

    Factorization fac = factorize(N, budget);
    v.incomplete = !fac.complete;

    std::vector<Int> primes;
    for (const auto& [p, e] : fac.factors)
        if (mod_floor(p, 4) == 3) primes.push_back(p);
    Factorization fv = factorize(V, budget);
    if (!fv.complete) throw IncompleteFactorization("decide_primitive: V not factored");
    for (const auto& [p, e] : fv.factors) {
        if (e != 1 || mod_floor(p, 4) != 3)
            throw Error("decide_primitive: V must be a squarefree product of primes 3 mod 4");
        primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    for (const Int& p : primes) {
        v.places.push_back(odd_certificate(S0, p, divides(p, V)));
        all_pass &= v.places.back().pass;
    }

    DyadicCase dc = dyadic_case(S0.F);
    if (dc.kind == DyadicKind::OnePlace && (!all_pass || v.incomplete)) {
        PlaceCertificate cert;
        cert.type = "dyadic";
        cert.p = Int(2);
        cert.rule = "single dyadic place: not certified (an earlier place failed or is unknown)";
        cert.pass = false;
        v.places.push_back(cert);
    } else {
        v.places.push_back(dyadic_test(S0, V));
        all_pass &= v.places.back().pass;
    }

    bool any_fail = false;
    for (const auto& c : v.places) any_fail |= !c.pass;
    if (v.incomplete && !any_fail)
        v.is_sum = Tri::Unknown;
    else
        v.is_sum = any_fail ? Tri::No : Tri::Yes;
    return v;
}

Verdict decide(const BiquadElem& T, const FactorBudget& budget) {
    if (T.is_zero()) {
        Verdict v;
        v.is_sum = Tri::Yes;
        PlaceCertificate cert;
        cert.type = "infinite";
        cert.rule = "zero element: 0 = 0^2 + 0^2";
        cert.pass = true;
        v.places.push_back(cert);
        v.witness = {BiquadElem::rational(T.F, 0), BiquadElem::rational(T.F, 0)};
        return v;
    }
    Normalization nz = normalize(T, budget);
    Verdict v = decide_primitive(nz.S0, nz.V, budget);
    v.normalization = nz;
    return v;
}

std::string explain(const Verdict& v) {
    std::ostringstream os;
    os << "verdict: "
       << (v.is_sum == Tri::Yes ? "sum of two squares"
                                : v.is_sum == Tri::No ? "not a sum of two squares" : "unknown")
       << "\n";
    if (v.incomplete) os << "note: factorization incomplete within budget\n";
    if (v.normalization) {
        const auto& n = *v.normalization;
        os << "normalization: Q=" << n.Q.get_str() << " U=" << n.U.get_str() << " V=" << n.V.get_str()
           << " S0=" << n.S0.str() << "\n";
    }
    for (const auto& c : v.places) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.type;
        if (c.p) os << " p=" << c.p->get_str();
        os << ": " << c.rule;
        for (const auto& [k, val] : c.data) os << " | " << k << "=" << val;
        os << "\n";
    }
    if (v.witness)
        os << "witness: x = " << v.witness->first.str() << ", y = " << v.witness->second.str() << "\n";
    return os.str();
}

}  // namespace biquad
