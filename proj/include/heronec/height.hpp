#pragma once

// Heights on elliptic curves over Q. The canonical height used throughout is
// the doubling-limit normalization hhat(P) = lim 4^-n h(x(2^n P)), twice the
// value some references attach to the same symbol; it satisfies
// hhat(2P) = 4 hhat(P) and vanishes exactly on torsion. Every height comes
// back as a certified enclosure: the truncation tail is absorbed with a
// height-difference bound in the style of Silverman (Math. Comp. 55 (1990)),
// deliberately fattened, so the returned interval always contains the true
// value.

#include <string>
#include <vector>

#include "heronec/curve.hpp"
#include "heronec/interval.hpp"

namespace heronec {

// log max(|num x(P)|, den x(P)); zero at infinity
Interval naive_height(const CurvePoint& p);

Interval canonical_height(const CurvePoint& p,
                          const Rational& target_error = Rational(1, 1000));

// <P,Q> = (hhat(P+Q) - hhat(P) - hhat(Q)) / 2
Interval height_pairing(const CurvePoint& p, const CurvePoint& q,
                        const Rational& target_error = Rational(1, 1000));

struct IndependenceReport {
    std::vector<CurvePoint> points;
    std::vector<Interval> heights;
    std::vector<std::vector<Interval>> gram;
    Interval determinant;
    // "independent": Gram determinant certified positive
    // "dependent": an exact relation sum_i relation[i] * P_i = O was verified
    // "inconclusive": determinant interval straddles zero, no small relation
    std::string verdict;
    std::vector<Integer> relation;
    std::string detail;
};

IndependenceReport independence_report(const std::vector<CurvePoint>& points,
                                       const Rational& target_error = Rational(1, 1000));

}  // namespace heronec
