#pragma once

#include <array>
#include <string>

#include "biquad/quad.hpp"

namespace biquad {

/// Q(sqrt a, sqrt b) with a, b squarefree and ab not a square. The three
/// quadratic subfields have radicands a, b and c = ab/g^2, g = gcd(a,b) > 0.
/// The canonical square root of c is fixed by sqrt(a)*sqrt(b) = g*sqrt(c);
/// every conjugation sign below derives from that identity.
struct BiquadField {
    Int a, b, c, g;

    bool real() const { return sgn(a) > 0 && sgn(b) > 0; }
    const Int& radicand(int i) const { return i == 1 ? a : i == 2 ? b : c; }
    bool operator==(const BiquadField& o) const { return a == o.a && b == o.b; }
};

/// Build the field from raw integers; non-squarefree inputs are reduced to
/// their squarefree cores. Throws DegenerateField when a or b reduces to 0 or
/// 1 or when ab is a perfect square.
BiquadField make_field(const Int& a_raw, const Int& b_raw, const FactorBudget& budget = {});

/// s0 + s1*sqrt(a) + s2*sqrt(b) + s3*sqrt(c), exact rational coordinates.
struct BiquadElem {
    BiquadField F;
    std::array<Rat, 4> s;

    static BiquadElem rational(const BiquadField& F, const Rat& r) { return {F, {r, 0, 0, 0}}; }

    bool is_zero() const;
    bool is_rational() const { return sgn(s[1]) == 0 && sgn(s[2]) == 0 && sgn(s[3]) == 0; }
    bool integral_coords() const;
    /// integer coordinates with gcd 1
    bool is_primitive() const;

    BiquadElem operator+(const BiquadElem& o) const;
    BiquadElem operator-(const BiquadElem& o) const;
    BiquadElem operator*(const BiquadElem& o) const;
    BiquadElem operator*(const Rat& r) const;
    BiquadElem operator-() const;
    bool operator==(const BiquadElem& o) const { return F == o.F && s == o.s; }

    std::string str() const;
};

/// The Galois conjugation fixing the i-th quadratic subfield pointwise
/// (i in {1,2,3}); an involution, and sigma1*sigma2 = sigma3.
BiquadElem sigma(const BiquadElem& S, int i);

/// T_i = S * sigma_i(S), projected into the subfield Q(sqrt of radicand i).
/// The two coordinates outside the subfield cancel identically.
QuadElem subfield_product(const BiquadElem& S, int i);

/// Product of the four conjugates; equals the subfield norm of T_i for each i.
Rat norm_total(const BiquadElem& S);

/// Exact sign of the image of S under the real embedding sqrt(a) -> sa*sqrt(a),
/// sqrt(b) -> sb*sqrt(b) (sa, sb in {+1,-1}); requires a real field.
/// Determined by nested comparisons of squares, no floating point:
/// sign(P + Q*sqrt(b)) follows from sign(P), sign(Q) and the comparison of
/// P^2 against b*Q^2, each resolved one level down in Q(sqrt a).
int sign_at_embedding(const BiquadElem& S, int sa, int sb);

/// All four real embeddings positive. Throws NotARealField when a<0 or b<0.
bool is_totally_positive(const BiquadElem& S);

/// Elementary symmetric functions (e1, e2, e3, e4) of the four conjugates;
/// the characteristic polynomial is X^4 - e1 X^3 + e2 X^2 - e3 X + e4.
std::array<Rat, 4> char_poly_symmetric(const BiquadElem& S);

/// Algebraic integer test: the degree-4 characteristic polynomial has integer
/// coefficients.
bool is_integral(const BiquadElem& S);

/// S = q * S0 with q a positive rational and S0 primitive (integer
/// coordinates, gcd 1, sign kept in S0). Throws ZeroElement.
std::pair<Rat, BiquadElem> content_split(const BiquadElem& S);

}  // namespace biquad
