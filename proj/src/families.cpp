#include "heronec/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "heronec/diophantine.hpp"
#include "heronec/errors.hpp"
#include "heronec/height.hpp"
#include "heronec/torsion.hpp"

namespace heronec {

namespace {

Rational p4(const Rational& x) { return pow(x, 4); }
Rational p6(const Rational& x) { return pow(x, 6); }

void attach(FamilyInstance& inst, const std::string& name, const Rational& x,
            const Rational& y) {
    inst.named_points.emplace_back(name, CurvePoint(inst.curve, x, y));
    inst.claims.push_back({"membership", name, "verified", ""});
}

void torsion_claim(FamilyInstance& inst, const std::string& payload,
                   const std::string& note = "") {
    inst.claims.push_back({"torsion", payload, "unverified", note});
}

size_t element_order(const CurvePoint& p) {
    if (p.is_infinity()) return 1;
    CurvePoint acc = p;
    for (size_t n = 1; n <= 16; ++n) {
        if (acc.is_infinity()) return n;
        acc = add(acc, p);
    }
    throw Error("torsion element order exceeds Mazur's bound");
}

std::map<size_t, size_t> order_counts(const TorsionGroup& t) {
    std::map<size_t, size_t> counts;
    for (const CurvePoint& p : t.elements) ++counts[element_order(p)];
    return counts;
}

std::map<size_t, size_t> abstract_counts(const std::string& structure) {
    auto cyclic = [](size_t n, size_t j) { return n / std::gcd(n, j); };
    std::map<size_t, size_t> counts;
    if (structure.rfind("Z/2xZ/", 0) == 0) {
        size_t m = std::stoul(structure.substr(6));
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < m; ++j) ++counts[std::lcm(cyclic(2, i), cyclic(m, j))];
    } else if (structure.rfind("Z/", 0) == 0) {
        size_t n = std::stoul(structure.substr(2));
        for (size_t j = 0; j < n; ++j) ++counts[cyclic(n, j)];
    } else {
        throw Error("unrecognized torsion structure '" + structure + "'");
    }
    return counts;
}

bool contains_structure(const TorsionGroup& t, const std::string& target) {
    std::map<size_t, size_t> have = order_counts(t);
    for (const auto& [order, needed] : abstract_counts(target))
        if (have[order] < needed) return false;
    return true;
}

bool torsion_matches(const TorsionGroup& t, const std::string& payload) {
    if (payload.rfind("contains ", 0) == 0) return contains_structure(t, payload.substr(9));
    size_t pos = 0;
    while (pos != std::string::npos) {
        size_t next = payload.find(" or ", pos);
        std::string option = payload.substr(pos, next == std::string::npos ? next : next - pos);
        if (t.structure == option) return true;
        pos = next == std::string::npos ? next : next + 4;
    }
    return false;
}

}  // namespace

const CurvePoint* FamilyInstance::point(const std::string& name) const {
    for (const auto& [n, p] : named_points)
        if (n == name) return &p;
    return nullptr;
}

const FamilyClaim* FamilyInstance::claim(const std::string& kind) const {
    for (const auto& c : claims)
        if (c.kind == kind) return &c;
    return nullptr;
}

FamilyInstance heron5(const Rational& A, const Rational& B, const Rational& C,
                      const std::optional<Rational>& D) {
    FamilyInstance inst;
    inst.family = "Heron5";
    inst.parameters = {{"A", A}, {"B", B}, {"C", C}};

    // 16 S^2, kept as one symmetric polynomial in the fourth powers
    Rational s16 = Rational(2) * (p4(A) * p4(B) + p4(A) * p4(C) + p4(B) * p4(C)) -
                   pow(A, 8) - pow(B, 8) - pow(C, 8);
    inst.curve = WeierstrassCurve::make(Rational(0), Rational(0), Rational(0),
                                        -s16 / Rational(4), Rational(0));

    attach(inst, "P1", A * A * B * B, A * B * (p4(A) + p4(B) - p4(C)) / Rational(2));
    attach(inst, "P2", A * A * C * C, A * C * (p4(A) + p4(C) - p4(B)) / Rational(2));
    attach(inst, "P3", B * B * C * C, B * C * (p4(B) + p4(C) - p4(A)) / Rational(2));

    if (D) {
        inst.parameters.emplace_back("D", *D);
        if (p4(A) + p4(*D) != Rational(2) * (p4(B) + p4(C)))
            throw QuarticConditionFailedError(
                "A^4 + D^4 = 2(B^4 + C^4) fails for the supplied parameters");
        attach(inst, "P4", B * B * *D * *D, B * *D * (p4(B) + p4(*D) - p4(C)) / Rational(2));
        attach(inst, "P5", C * C * *D * *D, C * *D * (p4(C) + p4(*D) - p4(B)) / Rational(2));
    }

    torsion_claim(inst, "contains Z/2", "equals Z/2 for generic parameters");
    return inst;
}

FamilyInstance brahmagupta6(const Rational& p, const Rational& q, const Rational& r,
                            const Rational& s,
                            const std::optional<std::pair<Rational, Rational>>& uv) {
    FamilyInstance inst;
    inst.family = "Brahmagupta6";
    inst.parameters = {{"p", p}, {"q", q}, {"r", r}, {"s", s}};

    Rational m = p * q * r * s;
    Rational a4 = Rational(-3) * m * m;
    Rational a6 = Rational(2) * m * m * m +
                  pow(p6(p) + p6(s) - p6(q) - p6(r), 2) / Rational(4) -
                  pow(pow(p, 3) * pow(s, 3) + pow(q, 3) * pow(r, 3), 2);
    inst.curve =
        WeierstrassCurve::make(Rational(0), Rational(0), Rational(0), a4, a6);

    Rational half(1, 2);
    attach(inst, "P1", p * p * q * q + r * r * s * s, (p6(p) + p6(q) - p6(r) - p6(s)) * half);
    attach(inst, "P2", p * p * r * r + q * q * s * s, (p6(p) - p6(q) + p6(r) - p6(s)) * half);
    attach(inst, "P3", p * p * s * s + q * q * r * r, (p6(p) - p6(q) - p6(r) + p6(s)) * half);

    if (uv) {
        const Rational& u = uv->first;
        const Rational& v = uv->second;
        inst.parameters.emplace_back("u", u);
        inst.parameters.emplace_back("v", v);
        if (p6(u) + p6(v) + p6(p) + p6(q) != Rational(2) * (p6(r) + p6(s)) || u * v != p * q)
            throw SexticSystemFailedError(
                "(u, v) does not solve u^6+v^6+p^6+q^6 = 2(r^6+s^6) with uv = pq");
        attach(inst, "P4", u * u * r * r + v * v * s * s,
               (p6(u) - p6(v) + p6(r) - p6(s)) * half);
        attach(inst, "P5", u * u * s * s + v * v * r * r,
               (p6(u) - p6(v) - p6(r) + p6(s)) * half);
    }
    return inst;
}

FamilyInstance aux_curve_c() {
    FamilyInstance inst;
    inst.family = "AuxC";
    inst.curve = WeierstrassCurve::make(Rational(-28), Rational(-20), Rational(-560),
                                        Rational(-400), Rational(8000));
    inst.claims.push_back({"rank_lb", "rank >= 1", "unverified",
                           "certify with point_search + canonical_height"});
    return inst;
}

FamilyInstance ek_curve(const Rational& k) {
    if (k == Rational(0) || k == Rational(2) || k == Rational(-2))
        throw ForbiddenParameterError("k must avoid 0, 2 and -2");
    FamilyInstance inst;
    inst.family = "Ek";
    Rational a = Rational(10) * k * k - Rational(8) * k + Rational(8);
    Rational b = k * (k * k - Rational(4) * k + Rational(20));
    Rational c = (k + Rational(2)) * (k * k - Rational(4));
    inst.parameters = {{"k", k}, {"a", a}, {"b", b}, {"c", c}};

    Rational ab = a * b, bc = b * c, ac = a * c;
    inst.curve = WeierstrassCurve::make(Rational(0), ab + bc + ac, Rational(0),
                                        a * b * c * (a + b + c), pow(a * b * c, 2));
    attach(inst, "T1", -ab, Rational(0));
    attach(inst, "T2", -bc, Rational(0));
    attach(inst, "T3", -ac, Rational(0));
    torsion_claim(inst, "Z/2xZ/2");
    inst.claims.push_back({"rank_lb", "rank >= 2", "unverified", ""});
    return inst;
}

FamilyInstance dtriple_curve(const Rational& k) {
    if (k == Rational(0) || k == Rational(1) || k == Rational(-1))
        throw ForbiddenParameterError("k must avoid 0, 1 and -1");
    FamilyInstance inst;
    inst.family = "DTriple";
    Rational a = k - Rational(1), b = k + Rational(1), c = Rational(4) * k;
    inst.parameters = {{"k", k}, {"a", a}, {"b", b}, {"c", c}};

    if (a * b + Rational(1) != k * k || a * c + Rational(1) != pow(Rational(2) * k - Rational(1), 2) ||
        b * c + Rational(1) != pow(Rational(2) * k + Rational(1), 2))
        throw DPropertyFailedError("D(1) identity failed for (k-1, k+1, 4k)");
    inst.claims.push_back({"identity", "D(1) triple", "verified",
                           "ab+1 = k^2, ac+1 = (2k-1)^2, bc+1 = (2k+1)^2"});

    // Y^2 = (aX+1)(bX+1)(cX+1) scaled through x = abcX, y = abcY
    Rational abc = a * b * c;
    inst.curve = WeierstrassCurve::make(Rational(0), a * b + b * c + a * c, Rational(0),
                                        abc * (a + b + c), abc * abc);
    attach(inst, "T1", -b * c, Rational(0));
    attach(inst, "T2", -a * c, Rational(0));
    attach(inst, "T3", -a * b, Rational(0));
    attach(inst, "U", Rational(0), abc);
    inst.claims.push_back({"rank_lb", "rank >= 2", "unverified", ""});
    return inst;
}

FamilyInstance tau_curve(const Rational& n, const Rational& tau) {
    if (tau.is_zero()) throw ForbiddenParameterError("tau must be nonzero");
    FamilyInstance inst;
    inst.family = "Tau";
    inst.parameters = {{"n", n}, {"tau", tau}};
    Rational r1 = n * tau, r2 = -n / tau;
    inst.curve = WeierstrassCurve::make(Rational(0), -(r1 + r2), Rational(0), r1 * r2,
                                        Rational(0));
    attach(inst, "T1", Rational(0), Rational(0));
    attach(inst, "T2", r1, Rational(0));
    attach(inst, "T3", r2, Rational(0));
    torsion_claim(inst, "contains Z/2xZ/2", "full two-torsion is rational by construction");
    if (tau == Rational(1))
        inst.diagnostics.push_back(
            "tau = 1: congruent-number form y^2 = x^3 - n^2 x, so n is a congruent number");
    return inst;
}

FamilyInstance triangle_to_tau(const Triangle& t) {
    Radical area = heron_area_sq(t);
    if (!area.root)
        throw TriangleAreaIrrationalError("triangle area " + area.sq.str() +
                                          " is not a rational square");
    Rational n = *area.root;
    Rational tau = Rational(4) * n / ((t.a() + t.b()) * (t.a() + t.b()) - t.c() * t.c());
    FamilyInstance inst = tau_curve(n, tau);
    inst.parameters.emplace_back("a", t.a());
    inst.parameters.emplace_back("b", t.b());
    inst.parameters.emplace_back("c", t.c());
    bool isosceles = t.a() == t.b() || t.a() == t.c() || t.b() == t.c();
    for (auto& claim : inst.claims)
        if (claim.kind == "torsion") {
            claim.payload = isosceles ? "Z/2xZ/2 or Z/2xZ/4" : "Z/2xZ/2";
            claim.note = isosceles ? "isosceles triangles may pick up a point of order four"
                                   : "";
        }
    return inst;
}

FamilyInstance alpha_curve(const Rational& alpha, const Rational& n) {
    FamilyInstance inst;
    inst.family = "AlphaN";
    inst.parameters = {{"alpha", alpha}, {"n", n}};
    inst.curve = WeierstrassCurve::make(Rational(0), alpha, Rational(0), -n * n,
                                        Rational(0));
    Rational expected = Rational(256) * pow(alpha * alpha + Rational(3) * n * n, 3) /
                        (p4(n) * (alpha * alpha + Rational(4) * n * n));
    if (inst.curve->j_invariant() != expected)
        throw Error("j-invariant identity failed for the alpha family");
    inst.claims.push_back({"identity", "j = 256(alpha^2+3n^2)^3 / (n^4(alpha^2+4n^2))",
                           "verified", "j = " + expected.str()});
    attach(inst, "T1", Rational(0), Rational(0));
    return inst;
}

FamilyInstance quad_to_curve(const CyclicQuadrilateral& q) {
    const Rational &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw SidesNotDistinctError("the construction needs pairwise distinct sides");

    FamilyInstance inst;
    inst.family = "QuadCyclic";
    inst.parameters = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
    Rational r1 = (b - a) * (d - c), r2 = (c - a) * (d - b);
    inst.curve = WeierstrassCurve::make(Rational(0), r1 + r2, Rational(0), r1 * r2,
                                        Rational(0));
    attach(inst, "T1", Rational(0), Rational(0));
    attach(inst, "T2", (a - b) * (d - c), Rational(0));
    attach(inst, "T3", (a - c) * (d - b), Rational(0));

    Rational s = q.semiperimeter();
    inst.parameters.emplace_back("s", s);
    Radical area = brahmagupta_area_sq(q);
    if (area.root) {
        const Rational& S = *area.root;
        inst.parameters.emplace_back("S", S);
        Rational zeta = Rational(-1) / s;
        Rational den = Rational(1) + d * zeta;
        attach(inst, "mapped", (Rational(1) + a * zeta) * (d - b) * (d - c) / den,
               zeta * zeta * S * (d - a) * (d - b) * (d - c) / (den * den));
    } else {
        inst.diagnostics.push_back("area^2 = " + area.sq.str() +
                                   " is not a rational square; mapped point omitted");
    }
    torsion_claim(inst, "contains Z/2xZ/2", "equals Z/2xZ/2 generically");
    return inst;
}

FamilyInstance bicentric_curve(const Rational& a) {
    if (a.is_zero()) throw ForbiddenParameterError("a must be nonzero");
    FamilyInstance inst;
    inst.family = "Bicentric";
    inst.parameters = {{"a", a}};
    Rational A = p4(a) - Rational(4) * pow(a, 3) - Rational(2) * a * a - Rational(4) * a +
                 Rational(1);
    inst.curve = WeierstrassCurve::make(Rational(0), A, Rational(0),
                                        Rational(16) * p4(a), Rational(0));
    attach(inst, "order_four", Rational(4) * a * a,
           Rational(4) * a * a * pow(a - Rational(1), 2));
    attach(inst, "order_eight", Rational(4) * a, Rational(4) * a * (a * a - Rational(1)));

    Rational split = a * a - Rational(6) * a + Rational(1);
    auto root = rational_square_root(split);
    if (root)
        torsion_claim(inst, "Z/2xZ/8",
                      "a^2 - 6a + 1 = (" + root->str() + ")^2 splits the two-torsion");
    else
        torsion_claim(inst, "Z/8", "a^2 - 6a + 1 is not a rational square");
    return inst;
}

Rational bicentric_param(const Rational& r) {
    if (r == Rational(0) || r == Rational(1) || r == Rational(-1))
        throw ForbiddenParameterError("r must avoid 0, 1 and -1");
    return -(r + Rational(1)) / (r * (r - Rational(1)));
}

FamilyInstance check_claims(FamilyInstance inst, const ClaimCheckOptions& opt) {
    std::optional<TorsionGroup> torsion;
    auto group = [&]() -> const TorsionGroup& {
        if (!torsion) torsion = torsion_subgroup(inst.curve);
        return *torsion;
    };

    for (FamilyClaim& claim : inst.claims) {
        if (claim.status != "unverified") continue;
        if (claim.kind == "torsion") {
            if (!opt.check_torsion) continue;
            bool ok = torsion_matches(group(), claim.payload);
            claim.status = ok ? "verified" : "failed";
            claim.note = "computed " + group().structure +
                         (claim.note.empty() ? "" : "; " + claim.note);
        } else if (claim.kind == "membership") {
            const CurvePoint* p = inst.point(claim.payload);
            claim.status =
                (p && (p->is_infinity() || inst.curve->is_on_curve(p->x(), p->y())))
                    ? "verified"
                    : "failed";
        } else if (claim.kind == "rank_lb") {
            if (!opt.check_rank_lb) continue;
            size_t want = std::stoul(claim.payload.substr(claim.payload.rfind(' ') + 1));
            std::vector<CurvePoint> certified;
            for (const CurvePoint& p : point_search(inst.curve, opt.point_search_bound)) {
                bool seen = false;
                for (const CurvePoint& c : certified) seen = seen || c.x() == p.x();
                if (seen) continue;
                if (canonical_height(p, opt.target_error).is_positive())
                    certified.push_back(p);
                if (certified.size() == 5) break;
            }
            std::string at_bound = " at search bound " + to_string(opt.point_search_bound);
            if (want == 1) {
                if (!certified.empty()) {
                    claim.status = "verified";
                    claim.note = "certified by (" + certified[0].x().str() + ", " +
                                 certified[0].y().str() + ") with positive canonical height";
                } else {
                    claim.note = "unconfirmed" + at_bound;
                }
            } else {
                bool done = false;
                std::vector<size_t> idx(certified.size());
                // try every subset of the certified points with the right size
                for (size_t mask = 0; mask < (size_t(1) << certified.size()) && !done;
                     ++mask) {
                    if (static_cast<size_t>(__builtin_popcountll(mask)) != want) continue;
                    std::vector<CurvePoint> subset;
                    for (size_t i = 0; i < certified.size(); ++i)
                        if (mask & (size_t(1) << i)) subset.push_back(certified[i]);
                    IndependenceReport rep = independence_report(subset, opt.target_error);
                    if (rep.verdict == "independent") {
                        claim.status = "verified";
                        claim.note = "certified by an independent set of " +
                                     std::to_string(want) + " points";
                        done = true;
                    }
                }
                if (!done)
                    claim.note = "could not certify " + std::to_string(want) +
                                 " independent points" + at_bound;
            }
        }
    }
    return inst;
}

}  // namespace heronec
