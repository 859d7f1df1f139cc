#include "heronec/json_io.hpp"

#include <cstdio>

namespace heronec {

namespace {

std::string double_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Json rational_json(const Rational& v) { return v.str(); }

Json interval_json(const Interval& v) {
    return Json{{"lo", double_str(v.lo_double())}, {"hi", double_str(v.hi_double())}};
}

Json curve_json(const CurveRef& curve) {
    return Json{{"a1", curve->a1().str()},
                {"a2", curve->a2().str()},
                {"a3", curve->a3().str()},
                {"a4", curve->a4().str()},
                {"a6", curve->a6().str()}};
}

Json point_json(const CurvePoint& p) {
    if (p.is_infinity()) return "O";
    return Json{{"x", p.x().str()}, {"y", p.y().str()}};
}

Json family_json(const FamilyInstance& inst) {
    Json params = Json::object();
    for (const auto& [name, value] : inst.parameters) params[name] = value.str();
    Json points = Json::object();
    for (const auto& [name, point] : inst.named_points) points[name] = point_json(point);
    Json claims = Json::array();
    for (const auto& claim : inst.claims) {
        Json c{{"kind", claim.kind}, {"payload", claim.payload}, {"status", claim.status}};
        if (!claim.note.empty()) c["note"] = claim.note;
        claims.push_back(c);
    }
    Json out{{"family", inst.family},
             {"params", params},
             {"curve", curve_json(inst.curve)},
             {"points", points},
             {"claims", claims}};
    if (!inst.diagnostics.empty()) out["diagnostics"] = inst.diagnostics;
    return out;
}

Json torsion_json(const TorsionGroup& t) {
    Json generators = Json::array();
    for (const auto& g : t.generators) generators.push_back(point_json(g));
    Json elements = Json::array();
    for (const auto& e : t.elements) elements.push_back(point_json(e));
    return Json{{"structure", t.structure},
                {"order", t.elements.size()},
                {"generators", generators},
                {"elements", elements}};
}

Json independence_json(const IndependenceReport& rep) {
    Json points = Json::array();
    for (const auto& p : rep.points) points.push_back(point_json(p));
    Json heights = Json::array();
    for (const auto& h : rep.heights) heights.push_back(interval_json(h));
    Json gram = Json::array();
    for (const auto& row : rep.gram) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(interval_json(entry));
        gram.push_back(r);
    }
    Json relation = Json::array();
    for (const auto& c : rep.relation) relation.push_back(to_string(c));
    return Json{{"points", points},
                {"heights", heights},
                {"gram", gram},
                {"determinant", interval_json(rep.determinant)},
                {"verdict", rep.verdict},
                {"relation", relation},
                {"detail", rep.detail}};
}

Json quartic_json(const QuarticSolution& s) {
    return Json{{"A", to_string(s.A)},
                {"B", to_string(s.B)},
                {"C", to_string(s.C)},
                {"D", to_string(s.D)},
                {"trivial", s.trivial}};
}

Json sextic_json(const SexticSolution& s) {
    return Json{{"u", to_string(s.u)}, {"v", to_string(s.v)}, {"p", to_string(s.p)},
                {"q", to_string(s.q)}, {"r", to_string(s.r)}, {"s", to_string(s.s)},
                {"trivial", s.trivial}};
}

}  // namespace heronec
