#include "biquad/quad.hpp"

namespace biquad {

SplittingType splitting_type(const Int& d, const Int& p) {
    int sym = legendre(d, p);
    if (sym == 0) return {SplitKind::Ramified, 0};
    if (sym == -1) return {SplitKind::Inert, 0};
    return {SplitKind::Split, sqrt_mod_p(d, p)};
}

long val_split(const QuadElem& r, const Int& p, const Int& root) {
    if (r.is_zero()) throw ZeroElement("val_split: zero element");
    if (!r.integral_coords()) throw Error("val_split: coordinates must be integers");
    Int x = r.x.get_num(), y = r.y.get_num();

    long f;
    if (x == 0)
        f = v_p(y, p);
    else if (y == 0)
        f = v_p(x, p);
    else
        f = std::min(v_p(x, p), v_p(y, p));
    if (f > 0) {
        Int pf;
        mpz_pow_ui(pf.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(f));
        x /= pf;
        y /= pf;
    }
    Int hat = mod_floor(x + y * mod_floor(root, p), p);
    if (hat != 0) return f;
    Int nrm = x * x - r.d * y * y;  // norm of the reduced element
    return f + v_p(nrm, p);
}

long val_ramified(const QuadElem& r, const Int& p) {
    if (r.is_zero()) throw ZeroElement("val_ramified: zero element");
    if (!r.integral_coords()) throw Error("val_ramified: coordinates must be integers");
    if (!divides(p, r.d)) throw Error("val_ramified: p must divide d");
    Int nrm = r.x.get_num() * r.x.get_num() - r.d * r.y.get_num() * r.y.get_num();
    return v_p(nrm, p);
}

std::optional<QuadElem> sqrt_quad(const QuadElem& z) {
    const Int& d = z.d;
    if (z.is_zero()) return QuadElem(d, 0, 0);
    if (sgn(z.y) == 0) {
        if (auto r = sqrt_exact(z.x)) return QuadElem(d, *r, 0);
        if (auto t = sqrt_exact(z.x / Rat(d))) return QuadElem(d, 0, *t);
        return std::nullopt;
    }
    // z = p^2 + d q^2 + 2pq sqrt(d): then (p^2 - d q^2)^2 = norm(z)
    auto w = sqrt_exact(z.norm());
    if (!w) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat psq = (z.x + (sign ? -*w : *w)) / 2;
        auto pr = sqrt_exact(psq);
        if (!pr || sgn(*pr) == 0) continue;
        Rat q = z.y / (2 * *pr);
        QuadElem cand(d, *pr, q);
        if (cand * cand == z) return cand;
    }
    return std::nullopt;
}

}  // namespace biquad
