#pragma once

// Triangles and cyclic/bicentric quadrilaterals with exact side lengths,
// plus the classical area, diagonal and radius formulas (Heron, Brahmagupta,
// Fuss-style radii). Quantities that are only rational after taking a square
// root come back as a Radical: the exact square together with the root when
// the root happens to be rational.

#include <optional>
#include <utility>

#include "heronec/exact.hpp"

namespace heronec {

struct Radical {
    Rational sq;
    std::optional<Rational> root;  // present iff sq is the square of a rational
};

Radical radical(Rational sq);

class Triangle {
  public:
    // throws DegenerateParametersError unless all sides are positive and the
    // strict triangle inequality holds
    Triangle(Rational a, Rational b, Rational c);
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    Rational semiperimeter() const;

  private:
    Rational a_, b_, c_;
};

class CyclicQuadrilateral {
  public:
    // sides in cyclic order; throws DegenerateParametersError unless all are
    // positive and each is strictly less than the sum of the other three
    CyclicQuadrilateral(Rational a, Rational b, Rational c, Rational d);
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    Rational semiperimeter() const;

  private:
    Rational a_, b_, c_, d_;
};

class BicentricQuadrilateral {
  public:
    // additionally enforces the Pitot identity a + c = b + d; only the side
    // lengths are validated, the angle condition is not expressible here
    BicentricQuadrilateral(Rational a, Rational b, Rational c, Rational d);
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    // = a + c = b + d (half the perimeter)
    Rational semiperimeter() const;

  private:
    Rational a_, b_, c_, d_;
};

// 16 A^2 = 2a^2b^2 + 2a^2c^2 + 2b^2c^2 - a^4 - b^4 - c^4
Radical heron_area_sq(const Triangle& t);

struct BrahmaguptaTriangle {
    Triangle triangle;
    Integer area;
};

// sides (n(k^2+m^2), m(k^2+n^2), (m+n)(mn-k^2)) with integer area
// k m n (m+n)(mn-k^2); requires k, m, n > 0 and k^2 < mn
BrahmaguptaTriangle brahmagupta_triangle(const Integer& k, const Integer& m, const Integer& n);

// S^2 = (s-a)(s-b)(s-c)(s-d)
Radical brahmagupta_area_sq(const CyclicQuadrilateral& q);

// D1^2 = (ac+bd)(ad+bc)/(ab+cd),  D2^2 = (ac+bd)(ab+cd)/(ad+bc)
std::pair<Radical, Radical> diagonals_sq(const CyclicQuadrilateral& q);

// sides a = (t(u+v)+1-uv)(u+v-t(1-uv)), b = (1+u^2)(v-t)(1+tv),
//       c = t(1+u^2)(1+v^2),           d = (1+v^2)(u-t)(1+tu);
// an all-negative side tuple is negated, a vanishing side or a mixed-sign
// tuple is rejected. The resulting quadrilateral has rational area and
// rational diagonals, which is re-verified on construction.
CyclicQuadrilateral sastry_quadrilateral(const Rational& t, const Rational& u, const Rational& v);

struct BicentricRadii {
    Radical R_sq;  // circumradius squared: (ab+cd)(ac+bd)(ad+bc) / (16 abcd)
    Radical r_sq;  // inradius squared: abcd / s^2
    Radical N_sq;  // (R/r)^2
};

BicentricRadii bicentric_radii_sq(const BicentricQuadrilateral& q);

}  // namespace heronec
