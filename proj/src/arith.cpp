#include "biquad/arith.hpp"

#include <algorithm>
#include <map>

namespace biquad {

std::optional<Rat> sqrt_exact(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rat(0);
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

Int inv_mod(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("inv_mod: not invertible");
    return r;
}

Int Factorization::reassemble() const {
    Int r = cofactor * sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& base) {
    // returns true if `base` witnesses n composite
    Int a = mod_floor(base, n);
    if (a == 0) return false;
    Int d = n - 1;
    unsigned long s = v2(d);
    d >>= s;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small) {
        if (n == p) return true;
        if (divides(Int(p), n)) return false;
    }
    // The first-13-primes base set is a proven deterministic Miller-Rabin
    // witness set below 3.317e24, far past 2^64.
    static const Int det_bound("3317044064679887385961981");
    if (n < det_bound) {
        for (int p : small)
            if (miller_rabin_witness(n, Int(p))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Pollard-Brent with f(x) = x^2 + c. Deterministic: the state evolves from
// (seed, c); returns a nontrivial factor or 0 when the budget is spent.
Int pollard_brent(const Int& n, unsigned long c0, unsigned long seed, unsigned long& iters_left) {
    if (divides(Int(2), n)) return 2;
    for (unsigned long c = c0; iters_left > 0; ++c) {
        Int y = mod_floor(Int(seed + c), n);
        if (y < 2) y = 2;
        Int x, q(1), g(1), ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1 && iters_left > 0) {
            x = y;
            for (unsigned long i = 0; i < r && iters_left > 0; ++i) {
                y = (y * y + c) % n;
                --iters_left;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && iters_left > 0) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim && iters_left > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                    --iters_left;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g > 1) return g;
    }
    return 0;
}

}  // namespace

Factorization factorize(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw ZeroElement("factorize: n must be nonzero");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> exps;

    for (Int d(2); d <= budget.trial_limit && d * d <= m; d += (d == 2 ? 1 : 2)) {
        while (divides(d, m)) {
            ++exps[d];
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (m > 1 && m <= Int(budget.trial_limit) * Int(budget.trial_limit)) {
        // below the trial bound squared the cofactor is prime
        ++exps[m];
        m = 1;
    }

    unsigned long iters = budget.rho_rounds;
    std::vector<Int> pending;
    if (m > 1) pending.push_back(m);
    Int incomplete_product(1);
    while (!pending.empty()) {
        Int t = pending.back();
        pending.pop_back();
        if (is_prime(t)) {
            ++exps[t];
            continue;
        }
        if (mpz_perfect_square_p(t.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
            pending.push_back(r);
            pending.push_back(r);
            continue;
        }
        Int f = pollard_brent(t, 1, budget.seed, iters);
        if (f == 0) {
            incomplete_product *= t;
            continue;
        }
        pending.push_back(f);
        Int q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), f.get_mpz_t());
        pending.push_back(q);
    }

    for (const auto& [p, e] : exps) out.factors.emplace_back(p, e);
    out.cofactor = incomplete_product;
    out.complete = incomplete_product == 1;
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n, const FactorBudget& budget) {
    Factorization f = factorize(n, budget);
    if (!f.complete) {
        // a composite cofactor might still carry a square part
        if (!mpz_perfect_square_p(f.cofactor.get_mpz_t()))
            throw IncompleteFactorization("squarefree_decompose: cofactor not factored");
        Int r;
        mpz_sqrt(r.get_mpz_t(), f.cofactor.get_mpz_t());
        // sqrt of the cofactor may itself be composite and must be squarefree
        Factorization g = factorize(r, budget);
        if (!g.complete) throw IncompleteFactorization("squarefree_decompose: cofactor not factored");
        for (const auto& [p, e] : g.factors)
            f.factors.emplace_back(p, 2 * e);
        f.cofactor = 1;
    }
    Int s(1), m(f.sign);
    for (const auto& [p, e] : f.factors) {
        Int ph;
        mpz_pow_ui(ph.get_mpz_t(), p.get_mpz_t(), e / 2);
        s *= ph;
        if (e % 2) m *= p;
    }
    return {s, m};
}

int legendre(const Int& a, const Int& p) {
    if (sgn(p) <= 0 || p < 3 || mpz_even_p(p.get_mpz_t()))
        throw Error("legendre: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Int sqrt_mod_p(const Int& a, const Int& p) {
    Int r = mod_floor(a, p);
    if (r == 0) return 0;
    if (legendre(r, p) == -1) throw NotAResidue("sqrt_mod_p: (a/p) = -1");

    Int x;
    if (mod_floor(p, 4) == 3) {
        Int e = (p + 1) / 4;
        mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    } else {
        // Tonelli-Shanks
        Int q = p - 1;
        unsigned long s = v2(q);
        q >>= s;
        Int z(2);
        while (legendre(z, p) != -1) ++z;
        Int cpow, t, rr;
        mpz_powm(cpow.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        Int e = (q + 1) / 2;
        mpz_powm(rr.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        unsigned long m = s;
        while (t != 1) {
            Int tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = tt * tt % p;
                ++i;
            }
            Int bexp = pow2(static_cast<unsigned>(m - i - 1));
            Int bb;
            mpz_powm(bb.get_mpz_t(), cpow.get_mpz_t(), bexp.get_mpz_t(), p.get_mpz_t());
            rr = rr * bb % p;
            cpow = bb * bb % p;
            t = t * cpow % p;
            m = i;
        }
        x = rr;
    }
    Int other = p - x;
    return std::min(x, other);
}

Int sqrt_2adic(const Int& n, unsigned k) {
    if (k < 3) throw Error("sqrt_2adic: k must be >= 3");
    if (mod_pow2(n, 3) != 1) throw NotA2adicSquare("sqrt_2adic: n must be 1 mod 8");
    Int x(1);
    for (unsigned j = 3; j < k; ++j) {
        // invariant: x odd, x^2 = n (mod 2^j)
        if (mod_pow2(x * x - n, j + 1) != 0) x += pow2(j - 1);
    }
    Int r = mod_pow2(x, k - 1);
    Int other = pow2(k - 1) - r;
    return std::min(r, other);
}

long v_p(const Int& n, const Int& p) {
    if (n == 0) throw ZeroElement("v_p: n must be nonzero");
    Int rem;
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long v_p(const Rat& q, const Int& p) {
    if (sgn(q) == 0) throw ZeroElement("v_p: argument must be nonzero");
    long vn = q.get_num() == 0 ? 0 : v_p(q.get_num(), p);
    long vd = v_p(q.get_den(), p);
    return vn - vd;
}

}  // namespace biquad
