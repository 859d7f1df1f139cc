#pragma once

// Dense univariate polynomials.  IPoly (integer coefficients) carries the
// root machinery: Sturm chains and an exact bisection that isolates integer
// roots without factoring anything, plus the classical divisor-based rational
// root search.  QPoly (rational coefficients) is the convenience layer used
// by the division-polynomial recurrences.
//
// Coefficient of x^i lives at index i; the zero polynomial is the empty
// vector; a normalized polynomial has a nonzero back().

#include <vector>

#include "heronec/exact.hpp"
#include "heronec/factor.hpp"

namespace heronec {

using IPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

int degree(const IPoly& p);  // -1 for the zero polynomial
int degree(const QPoly& p);
void normalize(IPoly& p);
void normalize(QPoly& p);

IPoly iadd(const IPoly& a, const IPoly& b);
IPoly isub(const IPoly& a, const IPoly& b);
IPoly imul(const IPoly& a, const IPoly& b);
IPoly iscale(const IPoly& a, const Integer& c);
IPoly iderive(const IPoly& a);

QPoly qadd(const QPoly& a, const QPoly& b);
QPoly qsub(const QPoly& a, const QPoly& b);
QPoly qmul(const QPoly& a, const QPoly& b);
QPoly qscale(const QPoly& a, const Rational& c);

Integer ieval(const IPoly& p, const Integer& x);
Rational qeval(const QPoly& p, const Rational& x);

// Sign of p(m/e) for e > 0, evaluated homogeneously so no rationals appear.
int sign_at(const IPoly& p, const Integer& m, const Integer& e);

// Content (positive gcd of coefficients) and the primitive part p / content;
// the sign of the leading coefficient is preserved.
Integer content(const IPoly& p);
IPoly primitive_part(const IPoly& p);

// gcd in Z[x] via the primitive pseudo-remainder sequence; result primitive
// with positive leading coefficient.  squarefree_part is p / gcd(p, p').
IPoly ipoly_gcd(const IPoly& a, const IPoly& b);
IPoly squarefree_part(const IPoly& p);

// Exact division; throws if b does not divide a in Z[x].
IPoly idivide_exact(const IPoly& a, const IPoly& b);

// All distinct integer roots, ascending.  Exact: Sturm-chain bisection over
// an integer Cauchy bound, no factorization involved.
std::vector<Integer> integer_roots(const IPoly& p);

// All distinct rational roots via the rational-root theorem: candidates are
// (divisor of trailing)/(divisor of leading).  Needs both of those factored,
// so huge unsmooth ends can make this fail where integer_roots would not.
std::vector<Rational> rational_roots(const IPoly& p, const FactorOptions& opt = {});

// Clear denominators: smallest positive integer multiple of q with integer
// coefficients (same roots).
IPoly to_ipoly(const QPoly& q);

}  // namespace heronec
