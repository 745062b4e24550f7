#include "biquad/oracle.hpp"

#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace biquad {

bool verify_witness(const BiquadElem& S, const BiquadElem& x, const BiquadElem& y) {
    if (!(S.F == x.F) || !(S.F == y.F)) return false;
    return x * x + y * y == S;
}

std::optional<BiquadElem> sqrt_element(const BiquadElem& z) {
    const BiquadField& F = z.F;
    const Rat g(F.g);
    if (z.is_zero()) return BiquadElem::rational(F, 0);

    auto embed_f1 = [&](const QuadElem& q) {
        return BiquadElem{F, {q.x, q.y, 0, 0}};
    };
    // y = (q0 + q1 sqrt a) * sqrt b has coordinates (0, 0, q0, q1*g)
    auto embed_f1_times_sqrtb = [&](const QuadElem& q) {
        return BiquadElem{F, {0, 0, q.x, q.y * g}};
    };

    // z = Z1 + Z2*sqrt(b) with Z1, Z2 in Q(sqrt a)
    QuadElem Z1(F.a, z.s[0], z.s[1]);
    QuadElem Z2(F.a, z.s[2], z.s[3] / g);

    if (Z2.is_zero()) {
        if (auto r = sqrt_quad(Z1)) return embed_f1(*r);
        if (auto r = sqrt_quad(QuadElem(F.a, Z1.x / Rat(F.b), Z1.y / Rat(F.b))))
            return embed_f1_times_sqrtb(*r);
        return std::nullopt;
    }
    // y = P + Q sqrt(b): P^2 + b Q^2 = Z1, 2PQ = Z2, so P^2 solves a quadratic
    // over Q(sqrt a) with discriminant Z1^2 - b Z2^2 (the relative norm of z).
    QuadElem D = Z1 * Z1 + QuadElem(F.a, -Rat(F.b), 0) * Z2 * Z2;
    auto W = sqrt_quad(D);
    if (!W) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        QuadElem Wx = sign ? QuadElem(F.a, -W->x, -W->y) : *W;
        QuadElem P2(F.a, (Z1.x + Wx.x) / 2, (Z1.y + Wx.y) / 2);
        auto P = sqrt_quad(P2);
        if (!P || P->is_zero()) continue;
        Rat nrm = P->norm();
        if (sgn(nrm) == 0) continue;
        // Q = Z2 * conj(P) / (2 * norm(P))
        QuadElem Q = Z2 * P->conj();
        Q.x /= 2 * nrm;
        Q.y /= 2 * nrm;
        BiquadElem y{F, {P->x, P->y, Q.x, Q.y * g}};
        if (y * y == z) return y;
    }
    return std::nullopt;
}

namespace {

BiquadElem sign_normalize(BiquadElem e) {
    for (const Rat& c : e.s) {
        if (sgn(c) == 0) continue;
        if (sgn(c) < 0) return -e;
        break;
    }
    return e;
}

bool lex_less(const BiquadElem& x, const BiquadElem& y) {
    for (int i = 0; i < 4; ++i) {
        if (x.s[i] != y.s[i]) return x.s[i] < y.s[i];
    }
    return false;
}

std::pair<BiquadElem, BiquadElem> canonical_pair(BiquadElem x, BiquadElem y) {
    x = sign_normalize(std::move(x));
    y = sign_normalize(std::move(y));
    if (lex_less(x, y)) std::swap(x, y);
    return {x, y};
}

}  // namespace

std::optional<std::pair<BiquadElem, BiquadElem>> find_witness(const BiquadElem& S,
                                                              const SearchParams& params) {
    const int den = params.denominator_bound;
    if (den != 1 && den != 2 && den != 4) throw Error("find_witness: denominator bound must be 1, 2 or 4");
    const long h = params.height;
    if (h < 0) throw Error("find_witness: height must be nonnegative");

    const long width = 2 * h + 1;
    const Rat dr(den);

    auto search_range = [&](long n0_lo, long n0_hi) -> std::optional<std::pair<BiquadElem, BiquadElem>> {
        for (long n0 = n0_lo; n0 < n0_hi; ++n0)
            for (long n1 = -h; n1 <= h; ++n1)
                for (long n2 = -h; n2 <= h; ++n2)
                    for (long n3 = -h; n3 <= h; ++n3) {
                        BiquadElem x{S.F, {Rat(n0) / dr, Rat(n1) / dr, Rat(n2) / dr, Rat(n3) / dr}};
                        BiquadElem z = S - x * x;
                        if (auto y = sqrt_element(z)) return std::make_pair(x, *y);
                    }
        return std::nullopt;
    };

    unsigned threads = params.threads ? params.threads : std::thread::hardware_concurrency();
    if (threads <= 1 || width <= 1) {
        auto r = search_range(-h, h + 1);
        if (!r) return std::nullopt;
        return canonical_pair(r->first, r->second);
    }

    // partition the leading coordinate; the earliest chunk holding a witness
    // also holds the lexicographically first one
    std::vector<std::future<std::optional<std::pair<BiquadElem, BiquadElem>>>> jobs;
    long chunk = (width + threads - 1) / threads;
    for (long lo = -h; lo <= h; lo += chunk) {
        long hi = std::min(lo + chunk, h + 1);
        jobs.push_back(std::async(std::launch::async, search_range, lo, hi));
    }
    std::optional<std::pair<BiquadElem, BiquadElem>> best;
    for (auto& j : jobs) {
        auto r = j.get();
        if (r && !best) best = r;
    }
    if (!best) return std::nullopt;
    return canonical_pair(best->first, best->second);
}

namespace {

int infinite_symbol_product(const BiquadElem& S0) {
    if (!S0.F.real()) return 1;
    int prod = 1;
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            if (sign_at_embedding(S0, sa, sb) < 0) prod = -prod;
    return prod;
}

// product of the odd-place symbols at p, and bookkeeping for the
// closed-form arbitration
struct OddSymbols {
    int product = 1;
    bool ramified = false;
};

OddSymbols odd_symbol_product(const BiquadElem& S0, const Int& p) {
    OddSymbols out;
    OddPlacePattern pat = classify_odd_place(S0.F, p);
    switch (pat.kind) {
        case OddPlacePattern::Kind::AutoPass:
            return out;
        case OddPlacePattern::Kind::CompletelySplit: {
            auto vals = odd_split_values(S0, pat);
            for (long v : vals)
                if ((v / 2) % 2 != 0) out.product = -out.product;
            return out;
        }
        case OddPlacePattern::Kind::RamifiedSplit: {
            out.ramified = true;
            auto vals = odd_ramified_values(S0, pat);
            for (long v : vals)
                if ((v / 2) % 2 != 0) out.product = -out.product;
            return out;
        }
    }
    return out;
}

}  // namespace

CorpusReport corpus_crosscheck(const std::vector<std::pair<Int, Int>>& fields, long bound,
                               long count, unsigned long seed, const SearchParams& params) {
    CorpusReport rep;
    FactorBudget budget;

    int field_index = 0;
    for (const auto& [fa, fb] : fields) {
        BiquadField F = make_field(fa, fb);
        std::string field_name = "(" + fa.get_str() + "," + fb.get_str() + ")";
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long>(field_index++));
        auto draw = [&]() { return static_cast<long>(rng() % (2 * bound + 1)) - bound; };

        for (long i = 0; i < count; ++i) {
            BiquadElem raw{F, {Rat(draw()), Rat(draw()), Rat(draw()), Rat(draw())}};
            if (raw.is_zero()) {
                --i;
                continue;
            }
            BiquadElem S0 = content_split(raw).second;
            ++rep.total;

            Verdict v;
            try {
                v = decide_primitive(S0, 1, budget);
            } catch (const IncompleteFactorization&) {
                ++rep.skipped_incomplete;
                continue;
            }
            if (v.incomplete) {
                ++rep.skipped_incomplete;
                continue;
            }
            (v.is_sum == Tri::Yes ? rep.decided_true : rep.decided_false)++;

            auto w = find_witness(S0, params);
            if (w) {
                ++rep.witnesses_found;
                if (!verify_witness(S0, w->first, w->second))
                    throw Error("corpus: search returned an invalid witness (bug)");
                if (v.is_sum == Tri::No) {
                    ++rep.fatal_contradictions;
                    rep.issues.push_back({"fatal", field_name, S0.str(),
                                          "witness " + w->first.str() + " ; " + w->second.str() +
                                              " but decide said no"});
                }
            } else if (v.is_sum == Tri::Yes) {
                ++rep.true_without_witness;
            }

            // reciprocity over all places, when every symbol is computable
            DyadicCase dc = dyadic_case(F);
            Rat nrm = norm_total(S0);
            Factorization fac = factorize(Int(nrm.get_num()), budget);
            if (fac.complete &&
                (dc.kind == DyadicKind::SplitInert || dc.kind == DyadicKind::CompletelySplit)) {
                int prod = infinite_symbol_product(S0);
                for (const auto& [p, e] : fac.factors)
                    if (mod_floor(p, 4) == 3) prod *= odd_symbol_product(S0, p).product;
                std::vector<int> dyadic_syms = dyadic_crosscheck(S0, 1);
                for (int sym : dyadic_syms) prod *= sym;
                ++rep.reciprocity_checked;
                if (prod != 1) {
                    ++rep.reciprocity_failures;
                    rep.issues.push_back({"reciprocity", field_name, S0.str(),
                                          "product of all computed symbols is -1"});
                }

                // Does the single canonical substitution agree with the
                // conjunction over every dyadic place? The shortcut is only
                // claimed when every infinite and odd place already passed.
                bool nondyadic_pass = true;
                bool one = true;
                for (const auto& c : v.places) {
                    if (c.type == "dyadic")
                        one = c.pass;
                    else
                        nondyadic_pass &= c.pass;
                }
                if (nondyadic_pass) {
                    bool all = true;
                    for (int sym : dyadic_syms) all &= sym == 1;
                    ++rep.dyadic_shortcut_checked;
                    if (one != all) {
                        ++rep.dyadic_shortcut_divergences;
                        rep.issues.push_back({"dyadic_divergence", field_name, S0.str(),
                                              "single substitution passed but another dyadic place fails"});
                    }
                }
            }

            // ramified primes: arbitrate the subtraction closed form and probe
            // V-scaling invariance of the local test
            if (fac.complete) {
                for (const auto& [p, e] : fac.factors) {
                    if (mod_floor(p, 4) != 3) continue;
                    OddPlacePattern pat = classify_odd_place(F, p);
                    if (pat.kind != OddPlacePattern::Kind::RamifiedSplit) continue;

                    for (int idx = 1; idx <= 3; ++idx) {
                        if (idx == pat.split_index) continue;
                        QuadElem T = subfield_product(S0, idx);
                        Int x = T.x.get_num(), y = T.y.get_num();
                        long f;
                        if (x == 0)
                            f = v_p(y, p);
                        else if (y == 0)
                            f = v_p(x, p);
                        else
                            f = std::min(v_p(x, p), v_p(y, p));
                        long norm_form = val_ramified(T, p);
                        long closed_form = norm_form - f;  // the subtraction form
                        ++rep.ramified_arbitration_checked;
                        if (closed_form != norm_form) {
                            ++rep.ramified_closed_form_disagreements;
                            if (rep.ramified_disagreement_instance.empty()) {
                                std::ostringstream os;
                                os << "p=" << p << " r=" << x << "+" << y << "*sqrt("
                                   << T.d << "): norm form " << norm_form << ", subtraction form "
                                   << closed_form;
                                rep.ramified_disagreement_instance = os.str();
                            }
                        }
                    }

                    Verdict scaled = decide(S0 * Rat(p), budget);
                    ++rep.v_scaling_checked;
                    bool base_pass = true, scaled_pass = true;
                    for (const auto& c : v.places)
                        if (c.type == "odd" && c.p && *c.p == p) base_pass = c.pass;
                    for (const auto& c : scaled.places)
                        if (c.type == "odd" && c.p && *c.p == p) scaled_pass = c.pass;
                    if (base_pass != scaled_pass) {
                        ++rep.v_scaling_mismatches;
                        rep.issues.push_back({"v_scaling", field_name, S0.str(),
                                              "ramified test changed under V-scaling at p=" + p.get_str()});
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace biquad
