#pragma once

#include <random>
#include <vector>

#include "biquad/field.hpp"

namespace biquad::testing {

inline Rat R(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline BiquadElem el(const BiquadField& F, const std::string& s0, const std::string& s1,
                     const std::string& s2, const std::string& s3) {
    return BiquadElem{F, {R(s0), R(s1), R(s2), R(s3)}};
}

inline BiquadElem el(const BiquadField& F, long s0, long s1, long s2, long s3) {
    return BiquadElem{F, {Rat(s0), Rat(s1), Rat(s2), Rat(s3)}};
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed = 20240917) : gen(seed) {}
    long pick(long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1)); }
};

inline Rat rat_of(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// brute-force Legendre symbol by enumerating squares mod p
inline int brute_legendre(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long x = 1; x < p; ++x)
        if ((x * x) % p == r) return 1;
    return -1;
}

inline const std::vector<long>& small_squarefree() {
    static const std::vector<long> v = {-1, 2,  3,  5,  -2, -3, 6,  7,  -5, -6, -7, 10, 11,
                                        13, 14, 15, 17, -10, -11, 21, 33, -13, -14, 19, 23};
    return v;
}

}  // namespace biquad::testing
