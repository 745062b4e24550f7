#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "biquad/field.hpp"
#include "test_support.hpp"

using namespace biquad;
using namespace biquad::testing;

namespace {

BiquadElem random_elem(Rng& rng, const BiquadField& F, long bound, long den = 1) {
    return BiquadElem{F,
                      {rat_of(rng.pick(-bound, bound), den), rat_of(rng.pick(-bound, bound), den),
                       rat_of(rng.pick(-bound, bound), den), rat_of(rng.pick(-bound, bound), den)}};
}

// independent floating check of an embedding sign, away from zero
double embed(const BiquadElem& S, int sa, int sb) {
    double ra = std::sqrt(static_cast<double>(S.F.a.get_d()));
    double rb = std::sqrt(static_cast<double>(S.F.b.get_d()));
    double rc = sa * ra * sb * rb / S.F.g.get_d();
    return S.s[0].get_d() + S.s[1].get_d() * sa * ra + S.s[2].get_d() * sb * rb + S.s[3].get_d() * rc;
}

}  // namespace

TEST_CASE("field construction") {
    BiquadField F = make_field(2, 3);
    CHECK(F.c == 6);
    CHECK(F.g == 1);
    BiquadField G = make_field(-3, 5);
    CHECK(G.c == -15);
    CHECK(G.g == 1);
    CHECK_THROWS_AS(make_field(2, 2), DegenerateField);
    CHECK_THROWS_AS(make_field(0, 5), DegenerateField);
    CHECK_THROWS_AS(make_field(4, 5), DegenerateField);  // reduces to a = 1
    CHECK_THROWS_AS(make_field(3, 12), DegenerateField); // ab = 36 square
    BiquadField H = make_field(8, 3);  // 8 reduces to 2
    CHECK(H.a == 2);
    CHECK(H.c == 6);
    BiquadField K = make_field(6, 10);
    CHECK(K.g == 2);
    CHECK(K.c == 15);
}

TEST_CASE("galois action") {
    BiquadField F = make_field(2, 3);
    BiquadElem ra = el(F, 0, 1, 0, 0);
    CHECK(sigma(ra, 1) == ra);
    CHECK(sigma(ra, 2) == -ra);
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        BiquadElem S = random_elem(rng, F, 20);
        CHECK(sigma(sigma(S, 1), 2) == sigma(S, 3));
        for (int j = 1; j <= 3; ++j) CHECK(sigma(sigma(S, j), j) == S);
    }
}

TEST_CASE("subfield products") {
    BiquadField F = make_field(2, 3);
    BiquadElem ra = el(F, 0, 1, 0, 0);
    QuadElem t1 = subfield_product(ra, 1);
    CHECK(t1 == QuadElem(2, 2, 0));
    QuadElem t2 = subfield_product(ra, 2);
    CHECK(t2 == QuadElem(3, -2, 0));

    BiquadElem S = el(F, 7, 2, 2, 1);
    QuadElem T1 = subfield_product(S, 1);
    CHECK(T1.norm() == 1009);
}

TEST_CASE("total norm") {
    CHECK(norm_total(el(make_field(2, 3), 7, 2, 2, 1)) == 1009);
    CHECK(norm_total(el(make_field(-3, 5), 2, 1, 1, -3)) == 20629);
    CHECK(norm_total(el(make_field(-7, 17), -92, 1, 21, -1)) == 3130541);
    CHECK(norm_total(el(make_field(2, 3), 1, 0, 0, 0)) == 1);

    Rng rng(29);
    for (long fa : {2L, -3L, 6L}) {
        BiquadField F = make_field(fa, fa == 6 ? 10 : 5);
        for (int i = 0; i < 40; ++i) {
            BiquadElem S = random_elem(rng, F, 15), T = random_elem(rng, F, 15);
            // one value, three subfield routes
            Rat n1 = subfield_product(S, 1).norm();
            Rat n2 = subfield_product(S, 2).norm();
            Rat n3 = subfield_product(S, 3).norm();
            CHECK(n1 == n2);
            CHECK(n2 == n3);
            CHECK(norm_total(S * T) == norm_total(S) * norm_total(T));
        }
    }
}

TEST_CASE("total positivity") {
    BiquadField F = make_field(2, 3);
    CHECK(is_totally_positive(el(F, 7, 2, 2, 1)));
    CHECK_FALSE(is_totally_positive(el(F, -1, 0, 0, 0)));
    CHECK_FALSE(is_totally_positive(el(F, 1, -2, 0, 0)));
    CHECK_THROWS_AS(is_totally_positive(el(make_field(-3, 5), 1, 0, 0, 0)), NotARealField);

    Rng rng(31);
    for (long fa : {2L, 3L, 21L}) {
        BiquadField G = make_field(fa, fa == 21 ? 33 : 7);
        for (int i = 0; i < 80; ++i) {
            BiquadElem S = random_elem(rng, G, 12);
            if (S.is_zero()) continue;
            CHECK(is_totally_positive(S * S));
            // spot-check each embedding sign against doubles when far from zero
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    double v = embed(S, sa, sb);
                    if (std::abs(v) > 1e-6) CHECK(sign_at_embedding(S, sa, sb) == (v > 0 ? 1 : -1));
                }
        }
    }
}

TEST_CASE("integrality") {
    BiquadField W = make_field(21, 33);
    CHECK(W.c == 77);
    CHECK(is_integral(el(W, "1/4", "-1/4", "1/4", "1/4")));
    CHECK_FALSE(is_integral(el(make_field(2, 3), "1/2", "0", "0", "0")));
    CHECK(is_integral(el(make_field(2, 3), 0, 0, 0, 1)));

    Rng rng(37);
    BiquadField F = make_field(-3, 5);
    for (int i = 0; i < 40; ++i) {
        BiquadElem S = random_elem(rng, F, 10), T = random_elem(rng, F, 10);
        CHECK(is_integral(S));  // integer coordinates are always integral
        CHECK(is_integral(S + T));
        CHECK(is_integral(S * T));
        for (int j = 1; j <= 3; ++j) {
            CHECK(is_integral(sigma(S, j)));
            CHECK(norm_total(sigma(S, j)) == norm_total(S));
        }
    }
    // half-integral integers of Q(sqrt 21, sqrt 33) stay closed under products
    BiquadElem h = el(W, "1/4", "-1/4", "1/4", "1/4");
    CHECK(is_integral(h * h));
    CHECK(is_integral(h * h + h));
}

TEST_CASE("content split") {
    BiquadField F = make_field(2, 3);
    auto [q1, s1] = content_split(el(F, 2, 2, 0, 0));
    CHECK(q1 == 2);
    CHECK(s1 == el(F, 1, 1, 0, 0));
    auto [q2, s2] = content_split(el(F, "0", "1/3", "0", "0"));
    CHECK(q2 == R("1/3"));
    CHECK(s2 == el(F, 0, 1, 0, 0));
    auto [q3, s3] = content_split(el(F, -6, 0, -9, 0));
    CHECK(q3 == 3);
    CHECK(s3 == el(F, -2, 0, -3, 0));
    CHECK_THROWS_AS(content_split(el(F, 0, 0, 0, 0)), ZeroElement);

    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        BiquadElem S = random_elem(rng, F, 30, rng.pick(1, 4));
        if (S.is_zero()) continue;
        auto [q, s0] = content_split(S);
        CHECK(sgn(q) > 0);
        CHECK(s0.is_primitive());
        CHECK(s0 * q == S);
    }
}
