#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biquad/decision.hpp"
#include "biquad/odd_places.hpp"
#include "test_support.hpp"

using namespace biquad;
using namespace biquad::testing;

namespace {

BiquadElem random_elem(Rng& rng, const BiquadField& F, long bound) {
    return BiquadElem{F, {Rat(rng.pick(-bound, bound)), Rat(rng.pick(-bound, bound)),
                          Rat(rng.pick(-bound, bound)), Rat(rng.pick(-bound, bound))}};
}

}  // namespace

TEST_CASE("classification of odd places") {
    BiquadField F = make_field(-3, 5);
    OddPlacePattern p7 = classify_odd_place(F, 7);
    CHECK(p7.kind == OddPlacePattern::Kind::AutoPass);
    CHECK(p7.symbols == std::array<int, 3>{1, -1, -1});

    BiquadField G = make_field(2, 3);
    REQUIRE(brute_legendre(2, 23) == 1);
    REQUIRE(brute_legendre(3, 23) == 1);
    OddPlacePattern p23 = classify_odd_place(G, 23);
    REQUIRE(p23.kind == OddPlacePattern::Kind::CompletelySplit);
    CHECK(mod_floor(p23.A * p23.A - 2, 23) == 0);
    CHECK(mod_floor(p23.B * p23.B - 3, 23) == 0);
    CHECK(mod_floor(p23.C * p23.C - 6, 23) == 0);
    CHECK(mod_floor(p23.C * G.g - p23.A * p23.B, 23) == 0);

    // p divides two radicands; the third decides between the two patterns
    BiquadField H = make_field(3, 21);  // radicands 3, 21, 7; p = 3 divides a and b
    OddPlacePattern r3 = classify_odd_place(H, 3);
    REQUIRE(r3.kind == OddPlacePattern::Kind::RamifiedSplit);
    CHECK(r3.split_index == 3);
    CHECK(mod_floor(r3.C * r3.C - 7, 3) == 0);

    BiquadField K = make_field(3, 6);  // radicands 3, 6, 2; (2/3) = -1
    CHECK(classify_odd_place(K, 3).kind == OddPlacePattern::Kind::AutoPass);

    CHECK_THROWS_AS(classify_odd_place(F, 5), Error);  // 5 = 1 mod 4 never dispatched here
}

TEST_CASE("minus one as a sum of two squares") {
    CHECK(minus_one_is_sum(make_field(-1, 2)));
    CHECK_FALSE(minus_one_is_sum(make_field(17, -7)));
    CHECK_FALSE(minus_one_is_sum(make_field(2, 3)));

    // cross-check against the full engine on a sample of fields
    for (auto [a, b] : std::vector<std::pair<long, long>>{
             {-1, 2}, {-3, 5}, {17, -7}, {-7, 17}, {2, -5}, {-1, 3}, {-15, 33}}) {
        BiquadField F = make_field(a, b);
        Verdict v = decide(el(F, -1, 0, 0, 0));
        REQUIRE(v.is_sum != Tri::Unknown);
        CHECK((v.is_sum == Tri::Yes) == minus_one_is_sum(F));
    }
}

TEST_CASE("rational primes as sums of two squares") {
    CHECK(rational_prime_is_sum(3, make_field(2, 5)));
    // both radicands are 1 mod 8 here, which blocks every q = 3 mod 4
    CHECK_FALSE(rational_prime_is_sum(3, make_field(17, 89)));
    CHECK_THROWS_AS(rational_prime_is_sum(7, make_field(17, -7)), NotApplicable);

    // cross-check against the full engine
    for (auto [q, a, b] : std::vector<std::array<long, 3>>{
             {3, 2, 5}, {3, 17, 89}, {7, 2, 3}, {3, -1, 2}, {11, -3, 5}, {3, 7, 5}}) {
        BiquadField F = make_field(a, b);
        Verdict v = decide(el(F, q, 0, 0, 0));
        REQUIRE(v.is_sum != Tri::Unknown);
        CHECK((v.is_sum == Tri::Yes) == rational_prime_is_sum(q, F));
    }
}

TEST_CASE("completely split values") {
    BiquadField F = make_field(2, 3);
    OddPlacePattern pat = classify_odd_place(F, 23);
    REQUIRE(pat.kind == OddPlacePattern::Kind::CompletelySplit);

    // S = p: valuation 1 at each of the four places
    auto vals = odd_split_values(el(F, 23, 0, 0, 0), pat);
    CHECK(vals == std::array<long, 4>{2, 2, 2, 2});

    // flipping all three roots permutes the four values
    OddPlacePattern flipped = pat;
    flipped.A = pat.p - pat.A;
    flipped.B = pat.p - pat.B;
    flipped.C = mod_floor(flipped.A * flipped.B * inv_mod(F.g, pat.p), pat.p);

    Rng rng(43);
    int done = 0;
    while (done < 200) {
        BiquadElem S = random_elem(rng, F, 40);
        if (S.is_zero()) continue;
        auto v = odd_split_values(S, pat);
        long total = 0;
        for (long x : v) {
            CHECK(x % 2 == 0);
            CHECK(x >= 0);
            total += x;
        }
        CHECK(total == 2 * v_p(norm_total(S), pat.p));
        auto w = odd_split_values(S, flipped);
        std::array<long, 4> expect = {v[3], v[2], v[1], v[0]};
        CHECK(w == expect);
        CHECK(odd_split_test(v, false) == odd_split_test(w, false));
        ++done;
    }
}

TEST_CASE("completely split test arms") {
    CHECK(odd_split_test({0, 0, 0, 0}, false));
    CHECK_FALSE(odd_split_test({0, 0, 0, 0}, true));
    CHECK(odd_split_test({2, 2, 2, 2}, true));
    CHECK_FALSE(odd_split_test({2, 2, 2, 2}, false));
    CHECK_FALSE(odd_split_test({0, 2, 0, 0}, false));
    CHECK_FALSE(odd_split_test({0, 2, 0, 0}, true));
    CHECK(odd_split_test({4, 8, 0, 4}, false));
    CHECK(odd_split_test({6, 2, 10, 2}, true));
}

TEST_CASE("ramified values") {
    BiquadField F = make_field(3, 21);  // p = 3 ramifies in F1, F2; F3 = Q(sqrt 7) splits
    OddPlacePattern pat = classify_odd_place(F, 3);
    REQUIRE(pat.kind == OddPlacePattern::Kind::RamifiedSplit);

    // S = p: pO_F = (P1 P2)^2, so v_{P_i}(p) = 2
    CHECK(odd_ramified_values(el(F, 3, 0, 0, 0), pat) == std::array<long, 2>{4, 4});
    // S = sqrt(a): v(a) = 2 at each place, so v(sqrt a) = 1
    CHECK(odd_ramified_values(el(F, 0, 1, 0, 0), pat) == std::array<long, 2>{2, 2});

    Rng rng(47);
    int done = 0;
    while (done < 200) {
        BiquadElem S = random_elem(rng, F, 40);
        if (S.is_zero()) continue;
        auto v = odd_ramified_values(S, pat);
        for (long x : v) {
            CHECK(x % 2 == 0);
            CHECK(x >= 0);
        }
        ++done;
    }
}

TEST_CASE("ramified test") {
    CHECK(odd_ramified_test({0, 0}));
    CHECK(odd_ramified_test({4, 8}));
    CHECK_FALSE(odd_ramified_test({2, 4}));
    CHECK_FALSE(odd_ramified_test({2, 2}));
}

TEST_CASE("dispatcher totality") {
    // every p = 3 mod 4 classifies, and the pattern matches its symbols
    Rng rng(59);
    const long primes[] = {3, 7, 11, 19, 23, 31, 43};
    int done = 0;
    while (done < 300) {
        long a = small_squarefree()[rng.pick(0, static_cast<long>(small_squarefree().size()) - 1)];
        long b = small_squarefree()[rng.pick(0, static_cast<long>(small_squarefree().size()) - 1)];
        BiquadField F;
        try {
            F = make_field(a, b);
        } catch (const DegenerateField&) {
            continue;
        }
        long p = primes[rng.pick(0, 6)];
        OddPlacePattern pat = classify_odd_place(F, p);
        int zeros = 0, plus = 0;
        for (int s : pat.symbols) {
            zeros += s == 0;
            plus += s == 1;
        }
        switch (pat.kind) {
            case OddPlacePattern::Kind::CompletelySplit:
                CHECK(plus == 3);
                break;
            case OddPlacePattern::Kind::RamifiedSplit:
                CHECK(zeros == 2);
                CHECK(pat.symbols[pat.split_index - 1] == 1);
                break;
            case OddPlacePattern::Kind::AutoPass:
                // a nonzero nonresidue radicand supplies sqrt(-1) locally
                CHECK(((zeros == 0 && plus == 1) || (zeros == 2 && plus == 0)));
                break;
        }
        ++done;
    }
}

TEST_CASE("symbol product relation") {
    Rng rng(53);
    const long primes[] = {3, 7, 11, 19, 23};
    int done = 0;
    while (done < 200) {
        long a = small_squarefree()[rng.pick(0, static_cast<long>(small_squarefree().size()) - 1)];
        long b = small_squarefree()[rng.pick(0, static_cast<long>(small_squarefree().size()) - 1)];
        BiquadField F;
        try {
            F = make_field(a, b);
        } catch (const DegenerateField&) {
            continue;
        }
        long p = primes[rng.pick(0, 4)];
        Int abc = F.a * F.b * F.c;
        if (!divides(Int(p), abc)) {
            CHECK(legendre(F.a, p) * legendre(F.b, p) == legendre(F.c, p));
            ++done;
        } else if (divides(Int(p), F.a) && divides(Int(p), F.b)) {
            CHECK(legendre(F.a / p, p) * legendre(F.b / p, p) == legendre(F.c, p));
            ++done;
        }
    }
}
