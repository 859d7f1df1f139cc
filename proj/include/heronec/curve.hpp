#pragma once

// Elliptic curves over Q in long Weierstrass form
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the chord-and-tangent group law and the usual invariant ladder
//   b2 = a1^2+4a2   b4 = 2a4+a1a3   b6 = a3^2+4a6   b8 = (b2 b6 - b4^2)/4
//   c4 = b2^2-24b4  c6 = -b2^3+36 b2 b4-216 b6
//   disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6,  1728 disc = c4^3 - c6^2
//
// Curves are immutable and shared; points remember which curve they live on
// and the group law refuses mismatched operands instead of coercing them.

#include <memory>

#include "heronec/exact.hpp"
#include "heronec/factor.hpp"

namespace heronec {

class WeierstrassCurve;
using CurveRef = std::shared_ptr<const WeierstrassCurve>;

class CurvePoint {
  public:
    static CurvePoint infinity(CurveRef curve);
    // validates the equation; throws PointNotOnCurveError
    CurvePoint(CurveRef curve, const Rational& x, const Rational& y);

    bool is_infinity() const { return inf_; }
    const Rational& x() const;
    const Rational& y() const;
    const CurveRef& curve() const { return curve_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b);
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
    friend bool operator<(const CurvePoint& a, const CurvePoint& b);  // infinity first, then (x, y)

    // trusted constructor for internal group-law results
    static CurvePoint unchecked(CurveRef curve, Rational x, Rational y);

  private:
    CurvePoint(CurveRef curve, bool inf, Rational x, Rational y)
        : curve_(std::move(curve)), inf_(inf), x_(std::move(x)), y_(std::move(y)) {}
    CurveRef curve_;
    bool inf_;
    Rational x_, y_;
};

class WeierstrassCurve {
  public:
    // throws SingularCurveError when the discriminant vanishes
    static CurveRef make(const Rational& a1, const Rational& a2, const Rational& a3,
                         const Rational& a4, const Rational& a6);

    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }
    const Rational& a3() const { return a3_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }
    const Rational& b2() const { return b2_; }
    const Rational& b4() const { return b4_; }
    const Rational& b6() const { return b6_; }
    const Rational& b8() const { return b8_; }
    const Rational& c4() const { return c4_; }
    const Rational& c6() const { return c6_; }
    const Rational& discriminant() const { return disc_; }
    const Rational& j_invariant() const { return j_; }

    bool is_integral() const;  // all five coefficients in Z
    bool is_short() const { return a1_.is_zero() && a3_.is_zero(); }

    // same model = same coefficient tuple; this is the identity points carry
    bool same_model(const WeierstrassCurve& other) const;

    bool is_on_curve(const Rational& x, const Rational& y) const;

  private:
    WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
    Rational a1_, a2_, a3_, a4_, a6_;
    Rational b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
};

CurvePoint neg(const CurvePoint& p);
CurvePoint add(const CurvePoint& p, const CurvePoint& q);
CurvePoint sub(const CurvePoint& p, const CurvePoint& q);
CurvePoint mul(const Integer& n, const CurvePoint& p);

// Change of model onto an integral y^2 = x^3 + A x^2 + B x + C target
// (A = 0 as well when fully_short): first complete the square in y, then
// optionally shift away the x^2 term, then scale by the smallest positive
// integer u making all coefficients integral:
//   X = u^2 (x + shift),  Y = u^3 (y + (a1 x + a3)/2).
struct ShortModelMap {
    CurveRef source;
    CurveRef target;
    Integer u;
    Rational shift;  // applied to x before scaling
    CurvePoint forward(const CurvePoint& p) const;
    CurvePoint backward(const CurvePoint& p) const;
};

ShortModelMap integral_short_model(const CurveRef& curve, bool fully_short = false,
                                   const FactorOptions& opt = {});

}  // namespace heronec
