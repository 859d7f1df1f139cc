#pragma once

// Rational torsion subgroups, computed exactly.
//
// The curve is first moved onto an integral model y^2 = x^3 + Ax^2 + Bx + C,
// where all torsion points have integer coordinates. Two-torsion comes from
// the integer roots of the cubic, odd orders from division polynomials, and
// orders 4, 8, 12 from solving x(2Q) = x(P) (a quartic in x(Q)) for points P
// already found. The result is closed under the group law, certified order
// by order, and classified against Mazur's list.

#include <string>
#include <vector>

#include "heronec/curve.hpp"
#include "heronec/poly.hpp"

namespace heronec {

struct TorsionGroup {
    // "Z/1" .. "Z/12" or "Z/2xZ/2" .. "Z/2xZ/8"
    std::string structure;
    // one generator for a cyclic group (none for the trivial group), two for
    // the Z/2 x Z/2N shapes; deterministic smallest-point choices
    std::vector<CurvePoint> generators;
    // the full group, sorted, infinity first
    std::vector<CurvePoint> elements;
    size_t order() const { return elements.size(); }
};

// #E(F_p) = p + 1 + sum_x legendre(f(x), p) on the reduced integral model;
// throws BadReductionError for p <= 3 or p dividing the model discriminant
Integer count_points_mod_p(const CurveRef& curve, const Integer& p);

// gcd of #E(F_p) over the first `primes` good primes above 3; the torsion
// order always divides this, and torsion_subgroup reconciles it exactly
Integer torsion_order_bound(const CurveRef& curve, int primes = 8);

struct DivisionPolynomial {
    QPoly poly;
    // for even n the full psi_n carries a factor 2y + a1 x + a3; poly is then
    // psi_n * (2y + a1 x + a3) as a polynomial in x alone
    bool y_factor;
};

// nth division polynomial, n in 1..12; roots of poly cover the x-coordinates
// of all points of order dividing n
DivisionPolynomial division_polynomial(const CurveRef& curve, int n);

TorsionGroup torsion_subgroup(const CurveRef& curve);

}  // namespace heronec
