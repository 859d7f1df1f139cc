#pragma once

// Exhaustive searchers for the quartic system A^4 + D^4 = 2(B^4 + C^4) and
// the sextic system u^6+v^6+p^6+q^6 = 2(r^6+s^6), uv = pq, over positive
// integers up to a bound, plus a D(n)-triple checker and a naive rational
// point search on a curve.
//
// Search results are canonical representatives of the symmetry orbits
// (A <= D, B <= C for the quartic; u <= v, p <= q, r <= s and
// (u,v) <= (p,q) lexicographically for the sextic) and are emitted in
// ascending lexicographic order, independent of the number of worker
// threads. Every emitted tuple is re-verified in exact arithmetic before it
// is returned.

#include <vector>

#include "heronec/curve.hpp"
#include "heronec/exact.hpp"
#include "heronec/geometry.hpp"

namespace heronec {

struct QuarticSolution {
    Integer A, B, C, D;
    // set when A = D, B = C, or {A,D} = {B,C} as multisets; such solutions
    // would not yield new independent points downstream
    bool trivial;
};

bool operator==(const QuarticSolution& a, const QuarticSolution& b);
bool operator<(const QuarticSolution& a, const QuarticSolution& b);

struct SexticSolution {
    Integer u, v, p, q, r, s;
    // set when {u,v} = {p,q} as multisets (the identity class)
    bool trivial;
};

bool operator==(const SexticSolution& a, const SexticSolution& b);
bool operator<(const SexticSolution& a, const SexticSolution& b);

// meet-in-the-middle over B <= C sums; bound is capped at 3000 to keep the
// sum table in memory (ConstraintError beyond)
std::vector<QuarticSolution> search_quartic(const Integer& bound, bool include_trivial = true,
                                            int jobs = 1);

// pairs with equal product uv = pq are grouped, their sixth-power sums meet
// a sorted r^6+s^6 table; bound capped at 1000 (ConstraintError beyond)
std::vector<SexticSolution> search_sextic(const Integer& bound, bool include_trivial = true,
                                          int jobs = 1);

struct DTripleReport {
    bool is_triple;      // all three products shifted by n are rational squares
    Radical ab, ac, bc;  // the shifted products with square roots when rational
};

DTripleReport is_d_triple(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& n);

// all rational points with x = m/e^2, |m| <= height_bound, 1 <= e^2 <=
// height_bound on the integral short model of the curve, mapped back to it;
// sorted and deduplicated; height_bound capped at 10^4
std::vector<CurvePoint> point_search(const CurveRef& curve, const Integer& height_bound);

}  // namespace heronec
