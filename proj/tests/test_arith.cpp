#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biquad/arith.hpp"
#include "test_support.hpp"

using namespace biquad;
using namespace biquad::testing;

TEST_CASE("factorize worked values") {
    Factorization f = factorize(Int(20629));
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, unsigned>(Int(7), 2u));
    CHECK(f.factors[1] == std::pair<Int, unsigned>(Int(421), 1u));

    Factorization one = factorize(Int(1));
    CHECK(one.factors.empty());
    CHECK(one.cofactor == 1);
    CHECK(one.complete);

    Factorization pr = factorize(Int(3130541));
    REQUIRE(pr.factors.size() == 1);
    CHECK(pr.factors[0].first == 3130541);
    CHECK(pr.factors[0].second == 1);
}

TEST_CASE("factorize reassembles and flags incompleteness") {
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        Int n = Int(rng.pick(1, 1000000)) * Int(rng.pick(1, 1000000)) * (rng.pick(0, 1) ? 1 : -1);
        Factorization f = factorize(n);
        REQUIRE(f.complete);
        CHECK(f.reassemble() == n);
        for (size_t j = 0; j + 1 < f.factors.size(); ++j) CHECK(f.factors[j].first < f.factors[j + 1].first);
        for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
    }

    // two ~40-digit primes defeat a starved budget but never yield a wrong answer
    Int p1("1000000000000000000000000000000000000003");
    Int p2("1000000000000000000000000000000000000037");
    REQUIRE(is_prime(p1));
    REQUIRE(is_prime(p2));
    FactorBudget tiny;
    tiny.trial_limit = 1000;
    tiny.rho_rounds = 50;
    Factorization f = factorize(p1 * p2, tiny);
    CHECK_FALSE(f.complete);
    CHECK(f.reassemble() == p1 * p2);
    CHECK_THROWS_AS(squarefree_decompose(p1 * p2, tiny), IncompleteFactorization);
}

TEST_CASE("squarefree decomposition") {
    CHECK(squarefree_decompose(Int(45)) == std::pair<Int, Int>(Int(3), Int(5)));
    CHECK(squarefree_decompose(Int(-7)) == std::pair<Int, Int>(Int(1), Int(-7)));

    // trial-division oracle for 48
    long n = 48, s = 1;
    for (long d = 2; d * d <= n; ++d)
        while (n % (d * d) == 0) {
            n /= d * d;
            s *= d;
        }
    CHECK(std::pair<Int, Int>(Int(s), Int(n)) == squarefree_decompose(Int(48)));

    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Int m = Int(rng.pick(2, 300000)) * (rng.pick(0, 1) ? 1 : -1);
        auto [sq, core] = squarefree_decompose(m);
        CHECK(sq * sq * core == m);
        CHECK(sgn(core) == sgn(m));
        for (const auto& [p, e] : factorize(core).factors) CHECK(e == 1);
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(Int(5), Int(7)) == -1);
    for (long p : {3L, 7L, 11L, 19L, 10007L}) CHECK(legendre(Int(1), Int(p)) == 1);
    CHECK(legendre(Int(2), Int(7)) == brute_legendre(2, 7));

    Rng rng(3);
    const long primes[] = {3, 7, 11, 19, 23, 31, 43};
    for (int i = 0; i < 200; ++i) {
        long p = primes[rng.pick(0, 6)];
        long a = rng.pick(-60, 60), b = rng.pick(-60, 60);
        CHECK(legendre(Int(a), Int(p)) == brute_legendre(a, p));
        if (a % p != 0 && b % p != 0)
            CHECK(legendre(Int(a) * Int(b), Int(p)) == legendre(Int(a), Int(p)) * legendre(Int(b), Int(p)));
    }
}

TEST_CASE("modular square root") {
    CHECK(sqrt_mod_p(Int(4), Int(11)) == 2);
    CHECK(sqrt_mod_p(Int(0), Int(13)) == 0);

    // brute-force oracle: 2 has roots {3, 4} mod 7; the canonical half picks 3
    long expect = -1;
    for (long r = 0; r <= 3; ++r)
        if ((r * r) % 7 == 2) expect = r;
    REQUIRE(expect == 3);
    CHECK(sqrt_mod_p(Int(2), Int(7)) == expect);

    CHECK_THROWS_AS(sqrt_mod_p(Int(5), Int(7)), NotAResidue);

    Rng rng(5);
    const long primes[] = {3, 7, 11, 13, 17, 10007, 100003};  // both residue classes mod 4
    for (int i = 0; i < 150; ++i) {
        long p = primes[rng.pick(0, 6)];
        Int a(rng.pick(0, p - 1));
        if (legendre(a, Int(p)) == -1) continue;
        Int r = sqrt_mod_p(a, Int(p));
        CHECK(mod_floor(r * r - a, Int(p)) == 0);
        CHECK(r <= Int(p - 1) / 2);
    }
}

TEST_CASE("2-adic square root") {
    CHECK(sqrt_2adic(Int(17), 8) == 23);
    CHECK(sqrt_2adic(Int(1), 8) == 1);

    // exhaustive oracle over odd E in [1, 63]
    long expect = 0;
    for (long e = 1; e < 64; e += 2)
        if ((e * e) % 256 == 41) expect = e;
    REQUIRE(expect != 0);
    CHECK(sqrt_2adic(Int(41), 8) == expect);

    CHECK_THROWS_AS(sqrt_2adic(Int(3), 8), NotA2adicSquare);

    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        unsigned k = static_cast<unsigned>(rng.pick(3, 24));
        Int n = Int(rng.pick(-2000000, 2000000)) * 8 + 1;
        Int e = sqrt_2adic(n, k);
        CHECK(mod_pow2(e * e - n, k) == 0);
        CHECK(e >= 1);
        CHECK(e < pow2(k - 2));
        if (k > 3) {
            // lifting consistency: the mod-2^k root folds down to the mod-2^(k-1) one
            Int prev = sqrt_2adic(n, k - 1);
            Int folded = mod_pow2(e, k - 2);
            Int alt = pow2(k - 2) - folded;
            CHECK((prev == folded || prev == alt));
        }
    }
}

TEST_CASE("p-adic valuation of rationals") {
    CHECK(v_p(Int(1009), Int(7)) == 0);
    CHECK(v_p(R("49/3"), Int(7)) == 2);
    for (long p : {3L, 5L, 31L}) CHECK(v_p(Rat(1), Int(p)) == 0);
    CHECK(v_p(R("-8/21"), Int(2)) == 3);
    CHECK(v_p(R("-8/21"), Int(7)) == -1);
    CHECK_THROWS_AS(v_p(Rat(0), Int(3)), ZeroElement);
}
