#include "heronec/geometry.hpp"

#include "heronec/errors.hpp"

namespace heronec {

Radical radical(Rational sq) {
    Radical r;
    r.root = rational_square_root(sq);
    r.sq = std::move(sq);
    return r;
}

Triangle::Triangle(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0)
        throw DegenerateParametersError("triangle sides must be positive");
    if (a_ >= b_ + c_ || b_ >= a_ + c_ || c_ >= a_ + b_)
        throw DegenerateParametersError("triangle inequality fails for (" + a_.str() + ", " +
                                        b_.str() + ", " + c_.str() + ")");
}

Rational Triangle::semiperimeter() const { return (a_ + b_ + c_) / Rational(2); }

CyclicQuadrilateral::CyclicQuadrilateral(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0 || d_.sign() <= 0)
        throw DegenerateParametersError("quadrilateral sides must be positive");
    Rational s = a_ + b_ + c_ + d_;
    // each side strictly below the sum of the other three
    if (Rational(2) * a_ >= s || Rational(2) * b_ >= s || Rational(2) * c_ >= s ||
        Rational(2) * d_ >= s)
        throw DegenerateParametersError("degenerate quadrilateral (" + a_.str() + ", " + b_.str() +
                                        ", " + c_.str() + ", " + d_.str() + ")");
}

Rational CyclicQuadrilateral::semiperimeter() const {
    return (a_ + b_ + c_ + d_) / Rational(2);
}

BicentricQuadrilateral::BicentricQuadrilateral(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0 || d_.sign() <= 0)
        throw DegenerateParametersError("quadrilateral sides must be positive");
    if (a_ + c_ != b_ + d_)
        throw ConstraintError("Pitot identity a + c = b + d fails for (" + a_.str() + ", " +
                              b_.str() + ", " + c_.str() + ", " + d_.str() + ")");
}

Rational BicentricQuadrilateral::semiperimeter() const { return a_ + c_; }

Radical heron_area_sq(const Triangle& t) {
    Rational a2 = t.a() * t.a(), b2 = t.b() * t.b(), c2 = t.c() * t.c();
    Rational sixteen_sq =
        Rational(2) * (a2 * b2 + a2 * c2 + b2 * c2) - a2 * a2 - b2 * b2 - c2 * c2;
    return radical(sixteen_sq / Rational(16));
}

BrahmaguptaTriangle brahmagupta_triangle(const Integer& k, const Integer& m, const Integer& n) {
    if (sgn(k) <= 0 || sgn(m) <= 0 || sgn(n) <= 0)
        throw ConstraintError("parameters must be positive");
    if (k * k >= m * n)
        throw ConstraintError("need k^2 < mn, got k=" + to_string(k) + " m=" + to_string(m) +
                              " n=" + to_string(n));
    Integer a = n * (k * k + m * m);
    Integer b = m * (k * k + n * n);
    Integer c = (m + n) * (m * n - k * k);
    Integer area = k * m * n * (m + n) * (m * n - k * k);
    BrahmaguptaTriangle result{Triangle(Rational(a), Rational(b), Rational(c)), area};
    if (heron_area_sq(result.triangle).sq != Rational(area * area))
        throw Error("area formula disagrees with Heron for k=" + to_string(k) + " m=" +
                    to_string(m) + " n=" + to_string(n));
    return result;
}

Radical brahmagupta_area_sq(const CyclicQuadrilateral& q) {
    Rational s = q.semiperimeter();
    return radical((s - q.a()) * (s - q.b()) * (s - q.c()) * (s - q.d()));
}

std::pair<Radical, Radical> diagonals_sq(const CyclicQuadrilateral& q) {
    Rational ac_bd = q.a() * q.c() + q.b() * q.d();
    Rational ad_bc = q.a() * q.d() + q.b() * q.c();
    Rational ab_cd = q.a() * q.b() + q.c() * q.d();
    return {radical(ac_bd * ad_bc / ab_cd), radical(ac_bd * ab_cd / ad_bc)};
}

CyclicQuadrilateral sastry_quadrilateral(const Rational& t, const Rational& u, const Rational& v) {
    Rational one(1);
    Rational a = (t * (u + v) + one - u * v) * (u + v - t * (one - u * v));
    Rational b = (one + u * u) * (v - t) * (one + t * v);
    Rational c = t * (one + u * u) * (one + v * v);
    Rational d = (one + v * v) * (u - t) * (one + t * u);
    if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero())
        throw DegenerateParametersError("a side vanishes at (t,u,v)=(" + t.str() + ", " + u.str() +
                                        ", " + v.str() + ")");
    // the parametrization only fixes the sides up to a common sign
    if (a.sign() < 0 && b.sign() < 0 && c.sign() < 0 && d.sign() < 0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0 || d.sign() < 0)
        throw DegenerateParametersError("mixed side signs at (t,u,v)=(" + t.str() + ", " +
                                        u.str() + ", " + v.str() + ")");
    CyclicQuadrilateral q(a, b, c, d);
    auto [d1, d2] = diagonals_sq(q);
    if (!brahmagupta_area_sq(q).root || !d1.root || !d2.root)
        throw Error("irrational area or diagonal at (t,u,v)=(" + t.str() + ", " + u.str() + ", " +
                    v.str() + ")");
    return q;
}

BicentricRadii bicentric_radii_sq(const BicentricQuadrilateral& q) {
    Rational ab_cd = q.a() * q.b() + q.c() * q.d();
    Rational ac_bd = q.a() * q.c() + q.b() * q.d();
    Rational ad_bc = q.a() * q.d() + q.b() * q.c();
    Rational abcd = q.a() * q.b() * q.c() * q.d();
    Rational s = q.semiperimeter();
    BicentricRadii r;
    r.R_sq = radical(ab_cd * ac_bd * ad_bc / (Rational(16) * abcd));
    r.r_sq = radical(abcd / (s * s));
    r.N_sq = radical(r.R_sq.sq / r.r_sq.sq);
    return r;
}

}  // namespace heronec
