#include "heronec/torsion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heronec/errors.hpp"

namespace heronec {

namespace {

long prime_to_long(const Integer& p) {
    if (!p.fits_slong_p()) throw BadReductionError("prime " + to_string(p) + " is out of range");
    return p.get_si();
}

// #E(F_p) for the integral model y^2 = x^3 + Ax^2 + Bx + C, p > 3 good
Integer count_on_integral(const Integer& A, const Integer& B, const Integer& C, long p) {
    Integer count = p + 1;
    Integer Ap = A % p, Bp = B % p, Cp = C % p;
    for (long x = 0; x < p; ++x) {
        Integer rhs = (((Integer(x) + Ap) * x + Bp) * x + Cp) % p;
        count += mpz_legendre(rhs.get_mpz_t(), Integer(p).get_mpz_t());
    }
    return count;
}

struct IntegralModel {
    ShortModelMap map;
    Integer A, B, C;     // target y^2 = x^3 + Ax^2 + Bx + C
    Integer disc;        // integer discriminant of the target
};

IntegralModel integral_model(const CurveRef& curve) {
    IntegralModel m;
    m.map = integral_short_model(curve);
    m.A = m.map.target->a2().num();
    m.B = m.map.target->a4().num();
    m.C = m.map.target->a6().num();
    m.disc = m.map.target->discriminant().num();
    return m;
}

bool good_prime(const IntegralModel& m, long p) {
    return !mpz_divisible_ui_p(m.disc.get_mpz_t(), static_cast<unsigned long>(p));
}

Integer bound_on_model(const IntegralModel& m, int primes) {
    if (primes < 1) throw ConstraintError("need at least one prime for the bound");
    Integer g = 0;
    Integer p = 3;
    int used = 0;
    while (used < primes) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        long pl = prime_to_long(p);
        if (!good_prime(m, pl)) continue;
        g = gcd(g, count_on_integral(m.A, m.B, m.C, pl));
        ++used;
    }
    return g;
}

Integer f_at(const IntegralModel& m, const Integer& x) {
    return ((x + m.A) * x + m.B) * x + m.C;
}

// division polynomial ladder with the 2y + a1 x + a3 factor squared away:
// u[n] is psi_n for odd n and psi_n / (2y + a1 x + a3) for even n, as
// polynomials in x over Q
std::vector<QPoly> psi_ladder(const WeierstrassCurve& c, int n) {
    QPoly F = {c.b6(), Rational(2) * c.b4(), c.b2(), Rational(4)};
    QPoly F2 = qmul(F, F);
    std::vector<QPoly> u(static_cast<size_t>(std::max(n, 4)) + 1);
    u[0] = {};
    u[1] = {Rational(1)};
    u[2] = {Rational(1)};
    u[3] = {c.b8(), Rational(3) * c.b6(), Rational(3) * c.b4(), c.b2(), Rational(3)};
    u[4] = {c.b4() * c.b8() - c.b6() * c.b6(),
            c.b2() * c.b8() - c.b4() * c.b6(),
            Rational(10) * c.b8(),
            Rational(10) * c.b6(),
            Rational(5) * c.b4(),
            c.b2(),
            Rational(2)};
    for (int k = 5; k <= n; ++k) {
        if (k % 2 == 1) {
            int m = (k - 1) / 2;
            QPoly a = qmul(u[m + 2], qmul(u[m], qmul(u[m], u[m])));
            QPoly b = qmul(u[m - 1], qmul(u[m + 1], qmul(u[m + 1], u[m + 1])));
            u[k] = (m % 2 == 0) ? qsub(qmul(F2, a), b) : qsub(a, qmul(F2, b));
        } else {
            int m = k / 2;
            QPoly a = qmul(u[m + 2], qmul(u[m - 1], u[m - 1]));
            QPoly b = qmul(u[m - 2], qmul(u[m + 1], u[m + 1]));
            u[k] = qmul(u[m], qsub(a, b));
        }
    }
    return u;
}

// x-coordinates of rational points Q with x(2Q) = xi on y^2 = x^3+Ax^2+Bx+C
IPoly halving_quartic(const IntegralModel& m, const Integer& xi) {
    IPoly q(5);
    q[4] = 1;
    q[3] = Integer(-4) * xi;
    q[2] = Integer(-2) * m.B - Integer(4) * m.A * xi;
    q[1] = Integer(-4) * m.B * xi - Integer(8) * m.C;
    q[0] = m.B * m.B - Integer(4) * m.A * m.C - Integer(4) * m.C * xi;
    return q;
}

size_t order_of(const CurvePoint& p) {
    CurvePoint acc = p;
    for (size_t n = 1; n <= 16; ++n) {
        if (acc.is_infinity()) return n;
        acc = add(acc, p);
    }
    throw Error("point order exceeds Mazur's bound; torsion search is inconsistent");
}

// candidate points (x, +-y) on the integral model at integer x, if any
void attach_points(const IntegralModel& m, const CurveRef& target, const Integer& x,
                   std::set<CurvePoint>& out) {
    Integer fy = f_at(m, x);
    if (sgn(fy) < 0) return;
    SqrtResult r = integer_sqrt(fy);
    if (!r.exact) return;
    out.insert(CurvePoint(target, Rational(x), Rational(r.root)));
    if (sgn(r.root) != 0) out.insert(CurvePoint(target, Rational(x), Rational(-r.root)));
}

// close a point set under addition; the Mazur bound 16 caps growth
std::set<CurvePoint> close_group(const CurveRef& target, std::set<CurvePoint> s) {
    s.insert(CurvePoint::infinity(target));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<CurvePoint> snapshot(s.begin(), s.end());
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) {
                CurvePoint c = add(a, b);
                if (s.insert(c).second) {
                    grew = true;
                    if (s.size() > 16)
                        throw Error("torsion closure exceeds Mazur's bound; "
                                    "a non-torsion point slipped in");
                }
            }
    }
    return s;
}

}  // namespace

Integer count_points_mod_p(const CurveRef& curve, const Integer& p) {
    long pl = prime_to_long(p);
    if (pl <= 3) throw BadReductionError("point counting needs a prime above 3");
    if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw BadReductionError(to_string(p) + " is not prime");
    IntegralModel m = integral_model(curve);
    if (!good_prime(m, pl))
        throw BadReductionError("bad reduction at " + to_string(p));
    return count_on_integral(m.A, m.B, m.C, pl);
}

Integer torsion_order_bound(const CurveRef& curve, int primes) {
    return bound_on_model(integral_model(curve), primes);
}

DivisionPolynomial division_polynomial(const CurveRef& curve, int n) {
    if (n < 1 || n > 12) throw ConstraintError("division polynomial index must be in 1..12");
    std::vector<QPoly> u = psi_ladder(*curve, n);
    DivisionPolynomial d;
    d.y_factor = (n % 2 == 0);
    if (d.y_factor) {
        QPoly F = {curve->b6(), Rational(2) * curve->b4(), curve->b2(), Rational(4)};
        d.poly = qmul(F, u[n]);
    } else {
        d.poly = u[n];
    }
    return d;
}

TorsionGroup torsion_subgroup(const CurveRef& curve) {
    IntegralModel m = integral_model(curve);
    const CurveRef& E = m.map.target;
    Integer bound = bound_on_model(m, 8);

    std::set<CurvePoint> pool;

    // 2-torsion: integer roots of the cubic
    IPoly f = {m.C, m.B, m.A, Integer(1)};
    for (const Integer& e : integer_roots(f))
        pool.insert(CurvePoint(E, Rational(e), Rational(0)));

    // odd orders allowed by Mazur, pruned by the mod-p bound
    std::vector<int> odd_orders;
    for (int n : {3, 5, 7, 9})
        if (mpz_divisible_ui_p(bound.get_mpz_t(), static_cast<unsigned long>(n)))
            odd_orders.push_back(n);
    if (!odd_orders.empty()) {
        std::vector<QPoly> ladder = psi_ladder(*E, odd_orders.back());
        for (int n : odd_orders)
            for (const Integer& x : integer_roots(to_ipoly(ladder[n])))
                attach_points(m, E, x, pool);
    }

    std::set<CurvePoint> group = close_group(E, std::move(pool));

    // orders 4, 8, 12 arise as halvings of points already present
    for (;;) {
        std::set<CurvePoint> found;
        for (const auto& p : group) {
            if (p.is_infinity()) continue;
            for (const Integer& x : integer_roots(halving_quartic(m, p.x().num())))
                attach_points(m, E, x, found);
        }
        size_t before = group.size();
        for (const auto& p : found) group.insert(p);
        group = close_group(E, std::move(group));
        if (group.size() == before) break;
    }

    size_t n = group.size();
    if (bound % Integer(static_cast<unsigned long>(n)) != 0)
        throw Error("torsion order does not divide the mod-p bound");

    size_t exponent = 1;
    std::map<CurvePoint, size_t> orders;
    for (const auto& p : group) {
        size_t o = p.is_infinity() ? 1 : order_of(p);
        orders.emplace(p, o);
        exponent = std::max(exponent, o);
    }

    TorsionGroup t;
    bool cyclic = (exponent == n);
    static const std::set<size_t> cyclic_sizes = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    if (cyclic) {
        if (!cyclic_sizes.count(n)) throw Error("cyclic torsion order outside Mazur's list");
        t.structure = "Z/" + std::to_string(n);
    } else {
        if (n != 2 * exponent || exponent % 2 != 0 || exponent > 8)
            throw Error("torsion structure outside Mazur's list");
        t.structure = "Z/2xZ/" + std::to_string(exponent);
    }

    // generators: smallest point of maximal order, plus for the non-cyclic
    // shapes the smallest 2-torsion point outside the first generator's span
    if (n > 1) {
        const CurvePoint* g1 = nullptr;
        for (const auto& p : group)
            if (orders[p] == exponent && (!g1 || p < *g1)) g1 = &p;
        t.generators.push_back(*g1);
        if (!cyclic) {
            CurvePoint half = mul(Integer(static_cast<unsigned long>(exponent / 2)), *g1);
            const CurvePoint* g2 = nullptr;
            for (const auto& p : group)
                if (orders[p] == 2 && p != half && (!g2 || p < *g2)) g2 = &p;
            if (!g2) throw Error("missing independent 2-torsion generator");
            t.generators.push_back(*g2);
        }
    }

    // map everything back to the original model
    for (auto& g : t.generators) g = m.map.backward(g);
    for (const auto& p : group) t.elements.push_back(m.map.backward(p));
    std::sort(t.elements.begin(), t.elements.end());
    return t;
}

}  // namespace heronec
