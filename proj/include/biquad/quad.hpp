#pragma once

#include "biquad/arith.hpp"
#include "biquad/numeric.hpp"

namespace biquad {

/// Element x + y*sqrt(d) of the quadratic field Q(sqrt d), d squarefree.
struct QuadElem {
    Int d;
    Rat x, y;

    QuadElem(Int d_, Rat x_, Rat y_) : d(std::move(d_)), x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    bool integral_coords() const { return x.get_den() == 1 && y.get_den() == 1; }

    QuadElem conj() const { return {d, x, -y}; }
    Rat norm() const { return x * x - Rat(d) * y * y; }

    QuadElem operator*(const QuadElem& o) const {
        return {d, x * o.x + Rat(d) * y * o.y, x * o.y + y * o.x};
    }
    QuadElem operator+(const QuadElem& o) const { return {d, x + o.x, y + o.y}; }
    bool operator==(const QuadElem& o) const { return d == o.d && x == o.x && y == o.y; }
};

enum class SplitKind { Split, Inert, Ramified };

struct SplittingType {
    SplitKind kind;
    Int root;  // canonical sqrt of d mod p, valid when kind == Split
};

/// Behavior of the odd prime p in Q(sqrt d): Split iff (d/p)=+1 (carries the
/// canonical root), Inert iff -1, Ramified iff p | d.
SplittingType splitting_type(const Int& d, const Int& p);

/// Valuation of a nonzero integral r at the split prime ideal (p, sqrt(d) - root).
/// Strips the p-content f of the coordinates first; the reduced element lies in
/// at most one of the two conjugate ideals, and membership is detected by the
/// substitution sqrt(d) -> root.
long val_split(const QuadElem& r, const Int& p, const Int& root);

/// Valuation of a nonzero integral r at the unique prime over p when p | d,
/// normalized so that v(p) = 2. Computed as v_p(norm(r)); conjugation fixes
/// the ramified prime, which forces v(r) = v(conj r) and hence this formula.
long val_ramified(const QuadElem& r, const Int& p);

/// Exact square root in Q(sqrt d), if z is a square there.
std::optional<QuadElem> sqrt_quad(const QuadElem& z);

}  // namespace biquad
