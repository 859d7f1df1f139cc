#pragma once

// Shared generators for the property tests: random Heron triangles (via the
// integer parametrization, optionally rescaled), isosceles Heron triangles
// (two mirrored Pythagorean halves), random Sastry quadrilaterals, and the
// derived curve parameters used by the triangle and quadrilateral families.

#include <optional>
#include <utility>

#include "heronec/curve.hpp"
#include "heronec/geometry.hpp"
#include "heronec/rng.hpp"

namespace heronec::testsupport {

inline Triangle random_heron_triangle(Rng& rng, bool rescale = true) {
    for (;;) {
        Integer k = rng.range(1, 9), m = rng.range(1, 9), n = rng.range(1, 9);
        if (k * k >= m * n) continue;
        Triangle t = brahmagupta_triangle(k, m, n).triangle;
        if (!rescale) return t;
        Rational lambda = rng.positive_rational(6, 4);
        return Triangle(t.a() * lambda, t.b() * lambda, t.c() * lambda);
    }
}

// (m^2+n^2, m^2+n^2, 2(m^2-n^2)) glues two right triangles along a leg
inline Triangle random_isosceles_heron(Rng& rng) {
    for (;;) {
        Integer m = rng.range(2, 9), n = rng.range(1, 8);
        if (n >= m) continue;
        Rational a(m * m + n * n);
        Rational base = rng.below(2) == 0 ? Rational(2 * (m * m - n * n))
                                          : Rational(4 * m * n);
        Rational lambda = rng.positive_rational(5, 3);
        return Triangle(a * lambda, a * lambda, base * lambda);
    }
}

inline bool is_isosceles(const Triangle& t) {
    return t.a() == t.b() || t.a() == t.c() || t.b() == t.c();
}

// tau = 4n / ((a+b)^2 - c^2) with n the (rational) area
inline std::pair<Rational, Rational> tau_parameters(const Triangle& t) {
    Radical area = heron_area_sq(t);
    if (!area.root) throw TriangleAreaIrrationalError("triangle area is irrational");
    const Rational& n = *area.root;
    Rational tau = Rational(4) * n / ((t.a() + t.b()) * (t.a() + t.b()) - t.c() * t.c());
    return {n, tau};
}

// y^2 = x (x - n tau) (x + n / tau)
inline CurveRef tau_curve_direct(const Rational& n, const Rational& tau) {
    Rational r1 = n * tau, r2 = -n / tau;
    return WeierstrassCurve::make(Rational(0), -(r1 + r2), Rational(0), r1 * r2, Rational(0));
}

// curve parameters (alpha, n) attached to a cyclic quadrilateral with
// rational area: alpha = (a^2 + b^2 + d^2 - c^2)/2, n = area
inline std::optional<std::pair<Rational, Rational>> quad_alpha_n(const CyclicQuadrilateral& q) {
    Radical area = brahmagupta_area_sq(q);
    if (!area.root) return std::nullopt;
    Rational alpha =
        (q.a() * q.a() + q.b() * q.b() + q.d() * q.d() - q.c() * q.c()) / Rational(2);
    return std::make_pair(alpha, *area.root);
}

inline CyclicQuadrilateral random_sastry(Rng& rng) {
    for (;;) {
        try {
            return sastry_quadrilateral(rng.rational(9, 4), rng.rational(9, 4),
                                        rng.rational(9, 4));
        } catch (const DegenerateParametersError&) {
        }
    }
}

}  // namespace heronec::testsupport
