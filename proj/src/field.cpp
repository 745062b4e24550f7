#include "biquad/field.hpp"

#include <sstream>

namespace biquad {

BiquadField make_field(const Int& a_raw, const Int& b_raw, const FactorBudget& budget) {
    if (a_raw == 0 || b_raw == 0) throw DegenerateField();
    auto [sa, a] = squarefree_decompose(a_raw, budget);
    auto [sb, b] = squarefree_decompose(b_raw, budget);
    (void)sa;
    (void)sb;
    if (a == 1 || b == 1) throw DegenerateField();
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int c = a * b / (g * g);
    if (c == 1) throw DegenerateField("degenerate field: ab is a perfect square");
    return {a, b, c, g};
}

bool BiquadElem::is_zero() const {
    return sgn(s[0]) == 0 && sgn(s[1]) == 0 && sgn(s[2]) == 0 && sgn(s[3]) == 0;
}

bool BiquadElem::integral_coords() const {
    for (const Rat& x : s)
        if (x.get_den() != 1) return false;
    return true;
}

bool BiquadElem::is_primitive() const {
    if (!integral_coords() || is_zero()) return false;
    Int gc(0);
    for (const Rat& x : s) mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), x.get_num().get_mpz_t());
    return gc == 1;
}

BiquadElem BiquadElem::operator+(const BiquadElem& o) const {
    if (!(F == o.F)) throw Error("element arithmetic across different fields");
    return {F, {s[0] + o.s[0], s[1] + o.s[1], s[2] + o.s[2], s[3] + o.s[3]}};
}

BiquadElem BiquadElem::operator-(const BiquadElem& o) const {
    if (!(F == o.F)) throw Error("element arithmetic across different fields");
    return {F, {s[0] - o.s[0], s[1] - o.s[1], s[2] - o.s[2], s[3] - o.s[3]}};
}

BiquadElem BiquadElem::operator-() const { return {F, {-s[0], -s[1], -s[2], -s[3]}}; }

BiquadElem BiquadElem::operator*(const Rat& r) const {
    return {F, {s[0] * r, s[1] * r, s[2] * r, s[3] * r}};
}

BiquadElem BiquadElem::operator*(const BiquadElem& o) const {
    if (!(F == o.F)) throw Error("element arithmetic across different fields");
    // sqrt(a)sqrt(b) = g sqrt(c), sqrt(a)sqrt(c) = (a/g) sqrt(b),
    // sqrt(b)sqrt(c) = (b/g) sqrt(a)
    const Rat a(F.a), b(F.b), c(F.c), g(F.g);
    const Rat ag(F.a / F.g), bg(F.b / F.g);
    const auto& t = o.s;
    return {F,
            {s[0] * t[0] + a * s[1] * t[1] + b * s[2] * t[2] + c * s[3] * t[3],
             s[0] * t[1] + s[1] * t[0] + bg * (s[2] * t[3] + s[3] * t[2]),
             s[0] * t[2] + s[2] * t[0] + ag * (s[1] * t[3] + s[3] * t[1]),
             s[0] * t[3] + s[3] * t[0] + g * (s[1] * t[2] + s[2] * t[1])}};
}

std::string BiquadElem::str() const {
    if (is_rational()) return s[0].get_str();
    std::ostringstream os;
    bool first = true;
    if (sgn(s[0]) != 0) {
        os << s[0].get_str();
        first = false;
    }
    const Int* vals[3] = {&F.a, &F.b, &F.c};
    for (int i = 1; i <= 3; ++i) {
        if (sgn(s[i]) == 0) continue;
        if (first)
            os << (sgn(s[i]) < 0 ? "-" : "");
        else
            os << (sgn(s[i]) < 0 ? " - " : " + ");
        first = false;
        Rat m = abs(s[i]);
        if (m != 1) os << m.get_str() << "*";
        os << "sqrt(" << vals[i - 1]->get_str() << ")";
    }
    return os.str();
}

BiquadElem sigma(const BiquadElem& S, int i) {
    auto t = S.s;
    switch (i) {
        case 1: t[2] = -t[2]; t[3] = -t[3]; break;
        case 2: t[1] = -t[1]; t[3] = -t[3]; break;
        case 3: t[1] = -t[1]; t[2] = -t[2]; break;
        default: throw Error("sigma: index must be 1, 2 or 3");
    }
    return {S.F, t};
}

QuadElem subfield_product(const BiquadElem& S, int i) {
    BiquadElem t = S * sigma(S, i);
    for (int j = 1; j <= 3; ++j) {
        if (j == i) continue;
        if (sgn(t.s[j]) != 0) throw Error("subfield_product: projection failed (arithmetic bug)");
    }
    return QuadElem(S.F.radicand(i), t.s[0], t.s[i]);
}

Rat norm_total(const BiquadElem& S) { return subfield_product(S, 1).norm(); }

namespace {

// sign of x + y*sqrt(d) for d > 0, exact
int sign_quad(const Rat& x, const Rat& y, const Int& d) {
    int sx = sgn(x), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    int cmp = sgn(x * x - Rat(d) * y * y);
    if (cmp == 0) return 0;
    return cmp > 0 ? sx : sy;
}

}  // namespace

int sign_at_embedding(const BiquadElem& S, int sa, int sb) {
    if (!S.F.real()) throw NotARealField();
    // S = P + Q*sqrt(b) with P = s0 + s1 sqrt(a), Q = s2 + (s3/g) sqrt(a)
    Rat p0 = S.s[0], p1 = Rat(sa) * S.s[1];
    Rat q0 = S.s[2], q1 = Rat(sa) * S.s[3] / Rat(S.F.g);
    int sp = sign_quad(p0, p1, S.F.a);
    int sq = sb * sign_quad(q0, q1, S.F.a);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // compare P^2 against b*Q^2 inside Q(sqrt a)
    Rat d0 = p0 * p0 + Rat(S.F.a) * p1 * p1 - Rat(S.F.b) * (q0 * q0 + Rat(S.F.a) * q1 * q1);
    Rat d1 = 2 * p0 * p1 - Rat(S.F.b) * 2 * q0 * q1;
    int cmp = sign_quad(d0, d1, S.F.a);
    if (cmp == 0) return 0;
    return cmp > 0 ? sp : sq;
}

bool is_totally_positive(const BiquadElem& S) {
    if (!S.F.real()) throw NotARealField();
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            if (sign_at_embedding(S, sa, sb) <= 0) return false;
    return true;
}

std::array<Rat, 4> char_poly_symmetric(const BiquadElem& S) {
    std::array<BiquadElem, 4> conj = {S, sigma(S, 1), sigma(S, 2), sigma(S, 3)};
    auto rational_part = [](const BiquadElem& e) {
        for (int j = 1; j <= 3; ++j)
            if (sgn(e.s[j]) != 0) throw Error("char_poly: symmetric function not rational");
        return e.s[0];
    };
    BiquadElem e1 = conj[0] + conj[1] + conj[2] + conj[3];
    BiquadElem e2sum = conj[0] * conj[1];
    e2sum = e2sum + conj[0] * conj[2];
    e2sum = e2sum + conj[0] * conj[3];
    e2sum = e2sum + conj[1] * conj[2];
    e2sum = e2sum + conj[1] * conj[3];
    e2sum = e2sum + conj[2] * conj[3];
    BiquadElem e3sum = conj[0] * conj[1] * conj[2];
    e3sum = e3sum + conj[0] * conj[1] * conj[3];
    e3sum = e3sum + conj[0] * conj[2] * conj[3];
    e3sum = e3sum + conj[1] * conj[2] * conj[3];
    BiquadElem e4 = conj[0] * conj[1] * conj[2] * conj[3];
    return {rational_part(e1), rational_part(e2sum), rational_part(e3sum), rational_part(e4)};
}

bool is_integral(const BiquadElem& S) {
    for (const Rat& e : char_poly_symmetric(S))
        if (e.get_den() != 1) return false;
    return true;
}

std::pair<Rat, BiquadElem> content_split(const BiquadElem& S) {
    if (S.is_zero()) throw ZeroElement("content_split: zero element");
    Int L(1);
    for (const Rat& x : S.s) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den().get_mpz_t());
    Int G(0);
    std::array<Int, 4> n;
    for (int i = 0; i < 4; ++i) {
        Rat scaled = S.s[i] * Rat(L);
        n[i] = scaled.get_num();
        mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), n[i].get_mpz_t());
    }
    Rat q(G, L);
    q.canonicalize();
    BiquadElem s0{S.F, {Rat(n[0] / G), Rat(n[1] / G), Rat(n[2] / G), Rat(n[3] / G)}};
    return {q, s0};
}

}  // namespace biquad
