#pragma once

// Constructors for the elliptic-curve families attached to Heron triangles,
// cyclic and bicentric quadrilaterals, and the related Diophantine systems.
// Each constructor returns the curve together with its named points and a
// list of claims. Claims are data, never assumptions: membership and
// polynomial identities are verified during construction, while torsion and
// rank statements start out "unverified" until check_claims runs the torsion
// and height machinery over them. A rank lower bound that cannot be certified
// stays "unverified" with a note; it is never silently dropped.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heronec/curve.hpp"
#include "heronec/geometry.hpp"

namespace heronec {

struct FamilyClaim {
    std::string kind;     // "torsion" | "membership" | "rank_lb" | "identity"
    std::string payload;  // e.g. "Z/2xZ/2", "contains Z/2", "rank >= 1", "P1"
    std::string status;   // "verified" | "unverified" | "failed"
    std::string note;
};

struct FamilyInstance {
    std::string family;
    std::vector<std::pair<std::string, Rational>> parameters;
    CurveRef curve;
    std::vector<std::pair<std::string, CurvePoint>> named_points;
    std::vector<FamilyClaim> claims;
    std::vector<std::string> diagnostics;

    const CurvePoint* point(const std::string& name) const;
    const FamilyClaim* claim(const std::string& kind) const;
};

// y^2 = x^3 - 4S^2 x with 16S^2 = 2A^4B^4 + 2A^4C^4 + 2B^4C^4 - A^8 - B^8 - C^8;
// P1..P3 always attach, P4/P5 attach when D satisfies A^4 + D^4 = 2(B^4 + C^4)
FamilyInstance heron5(const Rational& A, const Rational& B, const Rational& C,
                      const std::optional<Rational>& D = std::nullopt);

// y^2 = x^3 - 3(pqrs)^2 x + 2(pqrs)^3 + (p^6+s^6-q^6-r^6)^2/4 - (p^3s^3+q^3r^3)^2;
// P4/P5 attach when u^6+v^6+p^6+q^6 = 2(r^6+s^6) and uv = pq
FamilyInstance brahmagupta6(const Rational& p, const Rational& q, const Rational& r,
                            const Rational& s,
                            const std::optional<std::pair<Rational, Rational>>& uv =
                                std::nullopt);

// the fixed positive-rank curve y^2 - 28xy - 560y = x^3 - 20x^2 - 400x + 8000
FamilyInstance aux_curve_c();

// y^2 = (x + ab)(x + bc)(x + ac) with a = 10k^2-8k+8, b = k(k^2-4k+20),
// c = (k+2)(k^2-4); k outside {0, 2, -2}
FamilyInstance ek_curve(const Rational& k);

// Y^2 = (aX+1)(bX+1)(cX+1) for the D(1) triple (k-1, k+1, 4k), scaled to a
// Weierstrass model; k outside {0, 1, -1}
FamilyInstance dtriple_curve(const Rational& k);

// y^2 = x (x - n tau) (x + n / tau)
FamilyInstance tau_curve(const Rational& n, const Rational& tau);

// tau curve of a triangle with rational area: n = area,
// tau = 4n / ((a+b)^2 - c^2)
FamilyInstance triangle_to_tau(const Triangle& t);

// y^2 = x^3 + alpha x^2 - n^2 x, with the j-invariant identity
// j = 256 (alpha^2 + 3n^2)^3 / (n^4 (alpha^2 + 4n^2)) checked exactly
FamilyInstance alpha_curve(const Rational& alpha, const Rational& n);

// y^2 = x (x + (b-a)(d-c)) (x + (c-a)(d-b)) for a cyclic quadrilateral with
// pairwise distinct sides; the (semiperimeter, area) point maps to a named
// rational point when the area is rational
FamilyInstance quad_to_curve(const CyclicQuadrilateral& q);

// y^2 = x^3 + (a^4 - 4a^3 - 2a^2 - 4a + 1) x^2 + 16 a^4 x with canonical
// points of order four and eight; full two-torsion exactly when a^2 - 6a + 1
// is a rational square
FamilyInstance bicentric_curve(const Rational& a);

// the parameter value -(r+1)/(r(r-1)) whose curve has torsion Z/2 x Z/8
Rational bicentric_param(const Rational& r);

struct ClaimCheckOptions {
    Integer point_search_bound = Integer(100);
    Rational target_error = Rational(1, 1000);
    // rank certification runs a point search plus height computations; turn it
    // off when only the cheap claims matter
    bool check_rank_lb = true;
    bool check_torsion = true;
};

// settle every unverified claim that the torsion and height machinery can
// decide; rank lower bounds that stay open are annotated, not failed
FamilyInstance check_claims(FamilyInstance inst, const ClaimCheckOptions& opt = {});

}  // namespace heronec
