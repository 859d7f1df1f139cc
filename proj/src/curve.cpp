#include "heronec/curve.hpp"

namespace heronec {

CurvePoint CurvePoint::infinity(CurveRef curve) {
    return CurvePoint(std::move(curve), true, Rational(0), Rational(0));
}

CurvePoint::CurvePoint(CurveRef curve, const Rational& x, const Rational& y)
    : curve_(std::move(curve)), inf_(false), x_(x), y_(y) {
    if (!curve_) throw Error("point with null curve");
    if (!curve_->is_on_curve(x_, y_))
        throw PointNotOnCurveError("(" + x_.str() + ", " + y_.str() + ") not on curve");
}

CurvePoint CurvePoint::unchecked(CurveRef curve, Rational x, Rational y) {
    return CurvePoint(std::move(curve), false, std::move(x), std::move(y));
}

const Rational& CurvePoint::x() const {
    if (inf_) throw Error("x() of the point at infinity");
    return x_;
}

const Rational& CurvePoint::y() const {
    if (inf_) throw Error("y() of the point at infinity");
    return y_;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (!a.curve_->same_model(*b.curve_)) return false;
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.x_ == b.x_ && a.y_ == b.y_;
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.inf_ != b.inf_) return a.inf_;
    if (a.inf_) return false;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
}

WeierstrassCurve::WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
    b2_ = a1_ * a1_ + Rational(4) * a2_;
    b4_ = Rational(2) * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + Rational(4) * a6_;
    b8_ = (b2_ * b6_ - b4_ * b4_) / Rational(4);
    c4_ = b2_ * b2_ - Rational(24) * b4_;
    c6_ = -(b2_ * b2_ * b2_) + Rational(36) * b2_ * b4_ - Rational(216) * b6_;
    disc_ = -(b2_ * b2_) * b8_ - Rational(8) * b4_ * b4_ * b4_ - Rational(27) * b6_ * b6_ +
            Rational(9) * b2_ * b4_ * b6_;
    if (!disc_.is_zero()) j_ = c4_ * c4_ * c4_ / disc_;
}

CurveRef WeierstrassCurve::make(const Rational& a1, const Rational& a2, const Rational& a3,
                                const Rational& a4, const Rational& a6) {
    auto c = std::shared_ptr<WeierstrassCurve>(new WeierstrassCurve(a1, a2, a3, a4, a6));
    if (c->disc_.is_zero())
        throw SingularCurveError("discriminant vanishes for [" + a1.str() + "," + a2.str() + "," +
                                 a3.str() + "," + a4.str() + "," + a6.str() + "]");
    return c;
}

bool WeierstrassCurve::is_integral() const {
    return a1_.is_integer() && a2_.is_integer() && a3_.is_integer() && a4_.is_integer() &&
           a6_.is_integer();
}

bool WeierstrassCurve::same_model(const WeierstrassCurve& other) const {
    if (this == &other) return true;
    return a1_ == other.a1_ && a2_ == other.a2_ && a3_ == other.a3_ && a4_ == other.a4_ &&
           a6_ == other.a6_;
}

bool WeierstrassCurve::is_on_curve(const Rational& x, const Rational& y) const {
    Rational lhs = y * y + a1_ * x * y + a3_ * y;
    Rational rhs = ((x + a2_) * x + a4_) * x + a6_;
    return lhs == rhs;
}

namespace {

void require_same_curve(const CurvePoint& p, const CurvePoint& q) {
    if (!p.curve()->same_model(*q.curve()))
        throw CrossCurveError("group-law operands live on different curves");
}

}  // namespace

CurvePoint neg(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    const WeierstrassCurve& c = *p.curve();
    return CurvePoint::unchecked(p.curve(), p.x(), -p.y() - c.a1() * p.x() - c.a3());
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
    require_same_curve(p, q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const WeierstrassCurve& c = *p.curve();
    const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rational lambda;
    if (x1 == x2) {
        // q == -p exactly when y2 is the other root of the quadratic in y
        if (y2 == -y1 - c.a1() * x1 - c.a3()) return CurvePoint::infinity(p.curve());
        Rational denom = Rational(2) * y1 + c.a1() * x1 + c.a3();
        lambda = (Rational(3) * x1 * x1 + Rational(2) * c.a2() * x1 + c.a4() - c.a1() * y1) / denom;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = lambda * lambda + c.a1() * lambda - c.a2() - x1 - x2;
    Rational y3 = lambda * (x1 - x3) - y1 - c.a1() * x3 - c.a3();
    return CurvePoint::unchecked(p.curve(), std::move(x3), std::move(y3));
}

CurvePoint sub(const CurvePoint& p, const CurvePoint& q) { return add(p, neg(q)); }

CurvePoint mul(const Integer& n, const CurvePoint& p) {
    Integer k = n;
    CurvePoint base = p;
    if (sgn(k) < 0) {
        k = -k;
        base = neg(base);
    }
    CurvePoint acc = CurvePoint::infinity(p.curve());
    while (sgn(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base);
        k >>= 1;
        if (sgn(k) > 0) base = add(base, base);
    }
    return acc;
}

CurvePoint ShortModelMap::forward(const CurvePoint& p) const {
    if (!p.curve()->same_model(*source)) throw CrossCurveError("point not on the source model");
    if (p.is_infinity()) return CurvePoint::infinity(target);
    const WeierstrassCurve& c = *source;
    Rational u2(u * u), u3(u * u * u);
    Rational eta = p.y() + (c.a1() * p.x() + c.a3()) / Rational(2);
    return CurvePoint(target, u2 * (p.x() + shift), u3 * eta);
}

CurvePoint ShortModelMap::backward(const CurvePoint& p) const {
    if (!p.curve()->same_model(*target)) throw CrossCurveError("point not on the target model");
    if (p.is_infinity()) return CurvePoint::infinity(source);
    const WeierstrassCurve& c = *source;
    Rational u2(u * u), u3(u * u * u);
    Rational x = p.x() / u2 - shift;
    Rational y = p.y() / u3 - (c.a1() * x + c.a3()) / Rational(2);
    return CurvePoint(source, x, y);
}

ShortModelMap integral_short_model(const CurveRef& curve, bool fully_short,
                                   const FactorOptions& opt) {
    const WeierstrassCurve& c = *curve;
    // complete the square: eta = y + (a1 x + a3)/2 turns the model into
    // eta^2 = x^3 + A2 x^2 + A4 x + A6
    Rational A2 = c.a2() + c.a1() * c.a1() / Rational(4);
    Rational A4 = c.a4() + c.a1() * c.a3() / Rational(2);
    Rational A6 = c.a6() + c.a3() * c.a3() / Rational(4);
    Rational shift(0);
    if (fully_short) {
        // x -> x + A2/3 removes the quadratic term
        shift = A2 / Rational(3);
        Rational s = shift;
        Rational A4s = A4 - Rational(2) * A2 * s + Rational(3) * s * s;
        Rational A6s = A6 - A4 * s + A2 * s * s - s * s * s;
        A2 = Rational(0);
        A4 = A4s;
        A6 = A6s;
    }
    // smallest u > 0 with u^2 A2, u^4 A4, u^6 A6 all integral, prime by prime
    Integer dens = A2.den() * A4.den() * A6.den();
    Integer u = 1;
    if (dens != 1) {
        for (const auto& [p, e] : factorize(dens, opt)) {
            (void)e;
            auto vp = [&p](const Integer& n) {
                if (sgn(n) == 0) return 0ul;
                Integer m = n;
                unsigned long v = 0;
                while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                    m /= p;
                    ++v;
                }
                return v;
            };
            unsigned long e2 = vp(A2.den()), e4 = vp(A4.den()), e6 = vp(A6.den());
            unsigned long need = 0;
            need = std::max(need, (e2 + 1) / 2);
            need = std::max(need, (e4 + 3) / 4);
            need = std::max(need, (e6 + 5) / 6);
            u *= pow(p, need);
        }
    }
    Rational u2(u * u);
    Rational u4 = u2 * u2, u6 = u4 * u2;
    ShortModelMap map;
    map.source = curve;
    map.u = u;
    map.shift = shift;
    map.target = WeierstrassCurve::make(Rational(0), A2 * u2, Rational(0), A4 * u4, A6 * u6);
    return map;
}

}  // namespace heronec
