// Command-line front end: family construction and claim verification,
// meet-in-the-middle Diophantine searches with an optional on-disk cache
// (HERON_CACHE_DIR), and seeded reproduction suites.  With --json every
// result is a JSON line with exact rational strings and no timing, so the
// same invocation is byte-identical across runs and --jobs settings; human
// output adds elapsed times.

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heronec/diophantine.hpp"
#include "heronec/errors.hpp"
#include "heronec/families.hpp"
#include "heronec/geometry.hpp"
#include "heronec/height.hpp"
#include "heronec/json_io.hpp"
#include "heronec/rng.hpp"
#include "heronec/torsion.hpp"

namespace heronec {
namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string equation_str(const CurveRef& c) {
    std::ostringstream out;
    out << "y^2";
    if (!c->a1().is_zero()) out << " + (" << c->a1().str() << ")xy";
    if (!c->a3().is_zero()) out << " + (" << c->a3().str() << ")y";
    out << " = x^3";
    if (!c->a2().is_zero()) out << " + (" << c->a2().str() << ")x^2";
    if (!c->a4().is_zero()) out << " + (" << c->a4().str() << ")x";
    if (!c->a6().is_zero()) out << " + (" << c->a6().str() << ")";
    return out.str();
}

// ---------------------------------------------------------------- family ---

Rational need_param(const std::map<std::string, std::string>& vals, const std::string& name) {
    auto it = vals.find(name);
    if (it == vals.end() || it->second.empty())
        throw ParseError("family needs --" + name);
    return Rational::parse(it->second);
}

std::optional<Rational> maybe_param(const std::map<std::string, std::string>& vals,
                                    const std::string& name) {
    auto it = vals.find(name);
    if (it == vals.end() || it->second.empty()) return std::nullopt;
    return Rational::parse(it->second);
}

FamilyInstance build_family(const std::string& tag,
                            const std::map<std::string, std::string>& vals) {
    if (tag == "heron5")
        return heron5(need_param(vals, "A"), need_param(vals, "B"), need_param(vals, "C"),
                      maybe_param(vals, "D"));
    if (tag == "brahmagupta6") {
        auto u = maybe_param(vals, "u"), v = maybe_param(vals, "v");
        if (u.has_value() != v.has_value())
            throw ParseError("supply both --u and --v or neither");
        std::optional<std::pair<Rational, Rational>> uv;
        if (u) uv = std::make_pair(*u, *v);
        return brahmagupta6(need_param(vals, "p"), need_param(vals, "q"),
                            need_param(vals, "r"), need_param(vals, "s"), uv);
    }
    if (tag == "aux") return aux_curve_c();
    if (tag == "ek") return ek_curve(need_param(vals, "k"));
    if (tag == "dtriple") return dtriple_curve(need_param(vals, "k"));
    if (tag == "tau") {
        if (maybe_param(vals, "a"))
            return triangle_to_tau(Triangle(need_param(vals, "a"), need_param(vals, "b"),
                                            need_param(vals, "c")));
        return tau_curve(need_param(vals, "n"), need_param(vals, "tau"));
    }
    if (tag == "alpha") return alpha_curve(need_param(vals, "alpha"), need_param(vals, "n"));
    if (tag == "quad")
        return quad_to_curve(CyclicQuadrilateral(need_param(vals, "a"), need_param(vals, "b"),
                                                 need_param(vals, "c"),
                                                 need_param(vals, "d")));
    if (tag == "bicentric") {
        if (auto r = maybe_param(vals, "from-r")) return bicentric_curve(bicentric_param(*r));
        return bicentric_curve(need_param(vals, "a"));
    }
    throw ParseError("unknown family tag '" + tag +
                     "' (heron5, brahmagupta6, aux, ek, dtriple, tau, alpha, quad, bicentric)");
}

int run_family(const std::string& tag, const std::map<std::string, std::string>& vals,
               bool check_torsion, bool rank_lb, int64_t bound, bool json) {
    auto t0 = std::chrono::steady_clock::now();
    FamilyInstance inst = build_family(tag, vals);
    ClaimCheckOptions opt;
    opt.check_torsion = check_torsion;
    opt.check_rank_lb = rank_lb;
    opt.point_search_bound = Integer(bound);
    inst = check_claims(inst, opt);
    std::optional<TorsionGroup> torsion;
    if (check_torsion) torsion = torsion_subgroup(inst.curve);

    bool failed = false, unconfirmed = false;
    for (const auto& c : inst.claims) {
        failed = failed || c.status == "failed";
        unconfirmed = unconfirmed || (rank_lb && c.kind == "rank_lb" && c.status == "unverified");
    }

    if (json) {
        Json out{{"schema", "1"}, {"command", "family"}, {"instance", family_json(inst)}};
        if (torsion) out["torsion"] = torsion_json(*torsion);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "family: " << inst.family << "\n";
        for (const auto& [name, value] : inst.parameters)
            std::cout << "  " << name << " = " << value.str() << "\n";
        std::cout << "curve: " << equation_str(inst.curve) << "\n";
        for (const auto& [name, p] : inst.named_points)
            std::cout << "point " << name << ": (" << p.x().str() << ", " << p.y().str()
                      << ")\n";
        for (const auto& c : inst.claims) {
            std::cout << "claim " << c.kind << " [" << c.payload << "]: " << c.status;
            if (!c.note.empty()) std::cout << " (" << c.note << ")";
            std::cout << "\n";
        }
        for (const auto& d : inst.diagnostics) std::cout << "note: " << d << "\n";
        if (torsion) std::cout << "torsion: " << torsion->structure << "\n";
        std::cout << "elapsed: " << elapsed_ms(t0) << " ms\n";
    }
    if (unconfirmed)
        std::cerr << "warning: rank lower bound not confirmed at search bound " << bound
                  << "\n";
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------- search ---

std::string cache_file(const std::string& equation, int64_t bound) {
    const char* dir = std::getenv("HERON_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return "";
    std::filesystem::create_directories(dir);
    return std::string(dir) + "/" + equation + "-" + std::to_string(bound) + ".jsonl";
}

template <typename Solution>
bool load_cache(const std::string& path, Solution (*decode)(const Json&),
                std::vector<Solution>& out) {
    std::ifstream in(path);
    if (!in) return false;
    try {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            out.push_back(decode(Json::parse(line)));
        }
        return true;
    } catch (const std::exception&) {
        out.clear();
        return false;
    }
}

template <typename Solution>
void store_cache(const std::string& path, Json (*encode)(const Solution&),
                 const std::vector<Solution>& sols) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) return;
    for (const auto& s : sols) out << encode(s).dump() << "\n";
}

QuarticSolution decode_quartic(const Json& j) {
    return {parse_integer(j.at("A").get<std::string>()),
            parse_integer(j.at("B").get<std::string>()),
            parse_integer(j.at("C").get<std::string>()),
            parse_integer(j.at("D").get<std::string>()), j.at("trivial").get<bool>()};
}

SexticSolution decode_sextic(const Json& j) {
    return {parse_integer(j.at("u").get<std::string>()),
            parse_integer(j.at("v").get<std::string>()),
            parse_integer(j.at("p").get<std::string>()),
            parse_integer(j.at("q").get<std::string>()),
            parse_integer(j.at("r").get<std::string>()),
            parse_integer(j.at("s").get<std::string>()), j.at("trivial").get<bool>()};
}

template <typename Solution>
int emit_search(const std::string& equation, int64_t bound, bool include_trivial, bool json,
                std::chrono::steady_clock::time_point t0,
                const std::vector<Solution>& sols, Json (*encode)(const Solution&)) {
    size_t emitted = 0, trivial = 0;
    for (const auto& s : sols) {
        if (!include_trivial && s.trivial) continue;
        ++emitted;
        trivial += s.trivial;
        Json row = encode(s);
        if (json) {
            std::cout << row.dump() << "\n";
        } else {
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (it.key() == "trivial") continue;
                std::cout << it.key() << "=" << it.value().get<std::string>() << " ";
            }
            std::cout << (s.trivial ? "(trivial)" : "") << "\n";
        }
    }
    Json summary{{"schema", "1"},     {"command", "search"},
                 {"equation", equation}, {"bound", std::to_string(bound)},
                 {"count", emitted},  {"trivial_count", trivial}};
    if (json)
        std::cout << summary.dump() << "\n";
    else
        std::cout << emitted << " solution(s), " << trivial << " trivial, in "
                  << elapsed_ms(t0) << " ms\n";
    return 0;
}

int run_search(const std::string& equation, int64_t bound, bool include_trivial, int jobs,
               bool json) {
    auto t0 = std::chrono::steady_clock::now();
    std::string path = cache_file(equation, bound);
    if (equation == "quartic") {
        std::vector<QuarticSolution> sols;
        if (path.empty() || !load_cache(path, decode_quartic, sols)) {
            sols = search_quartic(Integer(bound), true, jobs);
            if (!path.empty()) store_cache(path, quartic_json, sols);
        }
        return emit_search(equation, bound, include_trivial, json, t0, sols, quartic_json);
    }
    if (equation == "sextic") {
        std::vector<SexticSolution> sols;
        if (path.empty() || !load_cache(path, decode_sextic, sols)) {
            sols = search_sextic(Integer(bound), true, jobs);
            if (!path.empty()) store_cache(path, sextic_json, sols);
        }
        return emit_search(equation, bound, include_trivial, json, t0, sols, sextic_json);
    }
    throw ParseError("unknown equation '" + equation + "' (quartic, sextic)");
}

// ------------------------------------------------------------- reproduce ---

class CheckRunner {
  public:
    CheckRunner(bool json) : json_(json) {}

    void run(const std::string& name, const std::function<Json()>& body) {
        Json line{{"check", name}};
        try {
            Json detail = body();
            line["status"] = "pass";
            if (!detail.is_null()) line["detail"] = detail;
        } catch (const std::exception& e) {
            line["status"] = "fail";
            line["error"] = e.what();
            ++failures_;
        }
        ++total_;
        if (json_)
            std::cout << line.dump() << "\n";
        else
            std::cout << (line["status"] == "pass" ? "PASS " : "FAIL ") << name << "\n";
    }

    size_t failures() const { return failures_; }
    size_t total() const { return total_; }

  private:
    bool json_;
    size_t total_ = 0;
    size_t failures_ = 0;
};

const CurvePoint& named_point(const FamilyInstance& inst, const std::string& name) {
    const CurvePoint* p = inst.point(name);
    expect(p != nullptr, "missing named point " + name);
    return *p;
}

void examples_suite(CheckRunner& checks, int jobs) {
    checks.run("quartic-search-bound-30", [&] {
        std::vector<QuarticSolution> nontrivial;
        for (const auto& s : search_quartic(Integer(30), true, jobs))
            if (!s.trivial) nontrivial.push_back(s);
        expect(nontrivial.size() == 1, "expected exactly one nontrivial solution");
        expect(nontrivial[0] ==
                   QuarticSolution{Integer(19), Integer(7), Integer(20), Integer(21), false},
               "expected (19,7,20,21)");
        return quartic_json(nontrivial[0]);
    });
    checks.run("heron5-(1,2,3)", [&] {
        FamilyInstance h = heron5(Rational(1), Rational(2), Rational(3));
        expect(h.curve->a4() == Rational(1008), "curve should be y^2 = x^3 + 1008x");
        expect(named_point(h, "P1") == CurvePoint(h.curve, Rational(4), Rational(-64)),
               "P1 should be (4, -64)");
        return Json{{"curve", curve_json(h.curve)}, {"P1", point_json(named_point(h, "P1"))}};
    });
    checks.run("heron5-quartic-condition-failure", [&] {
        try {
            heron5(Rational(1), Rational(2), Rational(3), Rational(1));
        } catch (const QuarticConditionFailedError&) {
            return Json();
        }
        throw CheckFailure("expected QuarticConditionFailed for D = 1");
    });
    checks.run("heron5-(19,7,20,21)-pipeline", [&] {
        FamilyInstance d = heron5(Rational(19), Rational(7), Rational(20), Rational(21));
        expect(d.named_points.size() == 5, "expected P1..P5 attached");
        Json points = Json::object();
        for (const auto& [name, p] : d.named_points) points[name] = point_json(p);
        return points;
    });
    checks.run("heron5-five-point-relation", [&] {
        FamilyInstance d = heron5(Rational(19), Rational(7), Rational(20), Rational(21));
        std::vector<CurvePoint> pts;
        for (const auto& [name, p] : d.named_points) pts.push_back(p);
        IndependenceReport rep = independence_report(pts, Rational(1, 100));
        expect(rep.verdict == "dependent", "expected the exact relation P1 = P3 + P4 + P5");
        return Json{{"verdict", rep.verdict}, {"detail", rep.detail}};
    });
    checks.run("brahmagupta6-(1,2,1,1)", [&] {
        FamilyInstance b = brahmagupta6(Rational(1), Rational(2), Rational(1), Rational(1));
        expect(b.curve->a6() == Rational(3709, 4), "curve constant should be 3709/4");
        expect(named_point(b, "P3") == CurvePoint(b.curve, Rational(5), Rational(-63, 2)),
               "P3 should be (5, -63/2)");
        return Json{{"P3", point_json(named_point(b, "P3"))}};
    });
    checks.run("brahmagupta6-singular-at-unit", [&] {
        try {
            brahmagupta6(Rational(1), Rational(1), Rational(1), Rational(1));
        } catch (const SingularCurveError&) {
            return Json();
        }
        throw CheckFailure("expected SingularCurve for p=q=r=s=1");
    });
    checks.run("sextic-search-bound-10", [&] {
        SexticSolution want{Integer(3), Integer(10), Integer(5),
                            Integer(6), Integer(2),  Integer(9), false};
        size_t nontrivial = 0;
        bool found = false;
        for (const auto& s : search_sextic(Integer(10), true, jobs)) {
            nontrivial += !s.trivial;
            found = found || s == want;
        }
        expect(found, "expected (3,10,5,6,2,9) among the solutions");
        return Json{{"nontrivial_count", nontrivial}};
    });
    checks.run("brahmagupta6-sextic-pipeline", [&] {
        FamilyInstance s = brahmagupta6(Rational(5), Rational(6), Rational(2), Rational(9),
                                        std::make_pair(Rational(3), Rational(10)));
        expect(named_point(s, "P4") ==
                   CurvePoint(s.curve, Rational(8136), Rational(-765324)),
               "P4 mismatch");
        expect(named_point(s, "P5") ==
                   CurvePoint(s.curve, Rational(1129), Rational(-233947)),
               "P5 mismatch");
        return Json{{"P4", point_json(named_point(s, "P4"))},
                    {"P5", point_json(named_point(s, "P5"))}};
    });
    checks.run("aux-rank-certificate", [&] {
        FamilyInstance aux = check_claims(aux_curve_c());
        const FamilyClaim* rank = aux.claim("rank_lb");
        expect(rank != nullptr && rank->status == "verified",
               "rank >= 1 should certify from the default point search");
        return Json{{"note", rank->note}};
    });
    checks.run("aux-torsion", [&] {
        TorsionGroup t = torsion_subgroup(aux_curve_c().curve);
        expect(t.structure == "Z/2xZ/4", "expected Z/2xZ/4");
        return Json{{"structure", t.structure}};
    });
    checks.run("ek-(1)-two-torsion", [&] {
        FamilyInstance e = ek_curve(Rational(1));
        expect(named_point(e, "T1").x() == Rational(-170), "T1 should sit at x = -170");
        expect(named_point(e, "T2").x() == Rational(153), "T2 should sit at x = 153");
        expect(named_point(e, "T3").x() == Rational(90), "T3 should sit at x = 90");
        return Json{{"x", Json::array({"-170", "153", "90"})}};
    });
    checks.run("ek-forbidden-parameter", [&] {
        try {
            ek_curve(Rational(2));
        } catch (const ForbiddenParameterError&) {
            return Json();
        }
        throw CheckFailure("expected ForbiddenParameter for k = 2");
    });
    checks.run("ek-(3)-torsion", [&] {
        ClaimCheckOptions opt;
        opt.check_rank_lb = false;
        FamilyInstance e = check_claims(ek_curve(Rational(3)), opt);
        expect(e.claim("torsion")->status == "verified", "torsion claim should verify");
        return Json{{"note", e.claim("torsion")->note}};
    });
    checks.run("dtriple-(2)-property", [&] {
        DTripleReport rep =
            is_d_triple(Rational(1), Rational(3), Rational(8), Rational(1));
        expect(rep.is_triple, "1,3,8 should be a D(1) triple");
        expect(rep.ab.root == Rational(2) && rep.ac.root == Rational(3) &&
                   rep.bc.root == Rational(5),
               "witnesses should be (2,3,5)");
        FamilyInstance d = dtriple_curve(Rational(2));
        expect(named_point(d, "U") == CurvePoint(d.curve, Rational(0), Rational(24)),
               "unit point should be (0, 24)");
        return Json{{"witnesses", Json::array({"2", "3", "5"})}};
    });
    checks.run("tau-(3,4,5)", [&] {
        FamilyInstance t = triangle_to_tau(Triangle(Rational(3), Rational(4), Rational(5)));
        expect(t.parameters[0].second == Rational(6), "area should be 6");
        expect(t.parameters[1].second == Rational(1), "tau should be 1");
        expect(!t.diagnostics.empty() &&
                   t.diagnostics[0].find("congruent") != std::string::npos,
               "congruent-number diagnostic expected at tau = 1");
        expect(torsion_subgroup(t.curve).structure == "Z/2xZ/2", "expected Z/2xZ/2");
        return Json{{"n", "6"}, {"tau", "1"}};
    });
    checks.run("tau-isosceles-(5,5,6)", [&] {
        FamilyInstance t = triangle_to_tau(Triangle(Rational(5), Rational(5), Rational(6)));
        expect(named_point(t, "T2").x() == Rational(9), "T2 should sit at x = 9");
        expect(named_point(t, "T3").x() == Rational(-16), "T3 should sit at x = -16");
        expect(torsion_subgroup(t.curve).structure == "Z/2xZ/4", "expected Z/2xZ/4");
        return Json{{"structure", "Z/2xZ/4"}};
    });
    checks.run("tau-area-irrational", [&] {
        try {
            triangle_to_tau(Triangle(Rational(1), Rational(1), Rational(1)));
        } catch (const TriangleAreaIrrationalError&) {
            return Json();
        }
        throw CheckFailure("expected TriangleAreaIrrational for the unit triangle");
    });
    checks.run("tau-alpha-congruent-coincidence", [&] {
        expect(tau_curve(Rational(5), Rational(1))
                   .curve->same_model(*alpha_curve(Rational(0), Rational(5)).curve),
               "tau = 1 should give the congruent-number model");
        return Json();
    });
    checks.run("alpha-(1,1)-j", [&] {
        FamilyInstance a = alpha_curve(Rational(1), Rational(1));
        expect(a.curve->j_invariant() == Rational(16384, 5), "j should be 16384/5");
        return Json{{"j", "16384/5"}};
    });
    checks.run("alpha-(-11,216)", [&] {
        FamilyInstance a = alpha_curve(Rational(-11), Rational(216));
        CurvePoint gen(a.curve, Rational(-196), Rational(1092));
        expect(torsion_subgroup(a.curve).structure == "Z/6", "expected torsion Z/6");
        Interval h = canonical_height(gen);
        expect(h.is_positive(), "generator height should certify positive");
        return Json{{"height", interval_json(h)}};
    });
    checks.run("quad-sides-not-distinct", [&] {
        try {
            quad_to_curve(CyclicQuadrilateral(Rational(13), Rational(13), Rational(23),
                                              Rational(13)));
        } catch (const SidesNotDistinctError&) {
            return Json();
        }
        throw CheckFailure("expected SidesNotDistinct for (13,13,23,13)");
    });
    checks.run("quad-(1,2,3,4)", [&] {
        FamilyInstance q = quad_to_curve(
            CyclicQuadrilateral(Rational(1), Rational(2), Rational(3), Rational(4)));
        expect(named_point(q, "T2") == CurvePoint(q.curve, Rational(-1), Rational(0)),
               "T2 should be (-1, 0)");
        expect(!q.diagnostics.empty(), "irrational area should leave a diagnostic");
        return Json{{"T2", point_json(named_point(q, "T2"))}};
    });
    checks.run("quad-(87,180,340,119)-mapped", [&] {
        FamilyInstance q = quad_to_curve(
            CyclicQuadrilateral(Rational(87), Rational(180), Rational(340), Rational(119)));
        expect(named_point(q, "mapped") ==
                   CurvePoint(q.curve, Rational(15249), Rational(121992)),
               "mapped point should be (15249, 121992)");
        return Json{{"mapped", point_json(named_point(q, "mapped"))}};
    });
    checks.run("bicentric-(2)", [&] {
        FamilyInstance b = bicentric_curve(Rational(2));
        expect(named_point(b, "order_four") == CurvePoint(b.curve, Rational(16), Rational(16)),
               "order-4 point should be (16, 16)");
        expect(torsion_subgroup(b.curve).structure == "Z/8", "expected Z/8");
        return Json{{"structure", "Z/8"}};
    });
    checks.run("bicentric-param-(2)", [&] {
        Rational a = bicentric_param(Rational(2));
        expect(a == Rational(-3, 2), "parametrization should give -3/2");
        expect(torsion_subgroup(bicentric_curve(a).curve).structure == "Z/2xZ/8",
               "expected Z/2xZ/8");
        return Json{{"a", a.str()}};
    });
}

constexpr std::array<const char*, 26> kTableOneR = {
    "12/17",   "47/18",   "133/86",  "201/239", "299/589", "247/160", "281/138",
    "281/133", "439/17",  "569/159", "923/230", "247/419", "200/99",  "337/65",
    "1017/352", "999/76",  "412/697", "349/230", "217/425", "440/217", "309/470",
    "496/319", "585/391", "219/313", "336/191", "257/287"};

int table1_suite(bool json, size_t rows, std::chrono::steady_clock::time_point t0) {
    if (json)
        std::cout << Json{{"schema", "1"},
                          {"command", "reproduce"},
                          {"suite", "table1"},
                          {"rows", rows},
                          {"note", "torsion verified per row; the published rank-3 values "
                                   "are not verified by this tool"}}
                         .dump()
                  << "\n";
    size_t failures = 0;
    ClaimCheckOptions opt;
    opt.check_rank_lb = false;
    for (size_t i = 0; i < rows && i < kTableOneR.size(); ++i) {
        Rational r = Rational::parse(kTableOneR[i]);
        Rational a = bicentric_param(r);
        FamilyInstance inst = check_claims(bicentric_curve(a), opt);
        const FamilyClaim* claim = inst.claim("torsion");
        bool ok = claim != nullptr && claim->payload == "Z/2xZ/8" &&
                  claim->status == "verified";
        failures += !ok;
        Json line{{"r", kTableOneR[i]},
                  {"a", a.str()},
                  {"expected", "Z/2xZ/8"},
                  {"status", ok ? "pass" : "fail"}};
        if (json)
            std::cout << line.dump() << "\n";
        else
            std::cout << (ok ? "PASS " : "FAIL ") << "r = " << kTableOneR[i]
                      << " -> a = " << a.str() << "\n";
    }
    if (!json)
        std::cout << rows << " row(s), " << failures << " failure(s), in "
                  << elapsed_ms(t0) << " ms\n";
    return failures == 0 ? 0 : 1;
}

Triangle random_heron_triangle(Rng& rng) {
    for (;;) {
        Integer k = rng.range(1, 9), m = rng.range(1, 9), n = rng.range(1, 9);
        if (k * k >= m * n) continue;
        return brahmagupta_triangle(k, m, n).triangle;
    }
}

Triangle random_isosceles_triangle(Rng& rng) {
    for (;;) {
        Integer m = rng.range(2, 9), n = rng.range(1, 8);
        if (n >= m) continue;
        Rational a(m * m + n * n);
        Rational base = rng.below(2) == 0 ? Rational(2 * (m * m - n * n)) : Rational(4 * m * n);
        return Triangle(a, a, base);
    }
}

CyclicQuadrilateral random_sastry_quad(Rng& rng) {
    for (;;) {
        try {
            return sastry_quadrilateral(rng.rational(9, 4), rng.rational(9, 4),
                                        rng.rational(9, 4));
        } catch (const DegenerateParametersError&) {
        }
    }
}

void sweep_line(CheckRunner& checks, const std::string& label, FamilyInstance inst) {
    checks.run(label, [&] {
        ClaimCheckOptions opt;
        opt.check_rank_lb = false;
        FamilyInstance done = check_claims(std::move(inst), opt);
        Json claims = Json::array();
        for (const auto& c : done.claims) {
            if (c.kind == "membership") {
                expect(c.status == "verified", "membership claim failed");
                continue;
            }
            if (c.kind == "rank_lb") continue;
            if (c.kind == "torsion" && c.status != "verified" &&
                done.family == "Heron5") {
                // the generic claim may be exceeded; exempt exactly when the
                // excess torsion is explained on y^2 = x^3 - 4S^2 x
                TorsionGroup t = torsion_subgroup(done.curve);
                bool full_two = rational_square_root(-done.curve->a4()).has_value();
                bool halvable = false;
                CurvePoint origin(done.curve, Rational(0), Rational(0));
                for (const auto& e : t.elements)
                    halvable = halvable || (!e.is_infinity() && add(e, e) == origin);
                expect(full_two || halvable, "unexplained torsion excess: " + t.structure);
                claims.push_back(Json{{"kind", c.kind}, {"status", "exempt"}});
                continue;
            }
            expect(c.status == "verified",
                   c.kind + " claim not verified: " + c.payload + " (" + c.note + ")");
            claims.push_back(Json{{"kind", c.kind}, {"payload", c.payload}});
        }
        Json params = Json::object();
        for (const auto& [name, value] : done.parameters) params[name] = value.str();
        return Json{{"family", done.family}, {"params", params}, {"claims", claims}};
    });
}

void torsion_sweep_suite(CheckRunner& checks, uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 5; ++i) {
        for (;;) {
            try {
                sweep_line(checks, "heron5-" + std::to_string(i),
                           heron5(rng.rational(6, 3), rng.rational(6, 3), rng.rational(6, 3)));
                break;
            } catch (const SingularCurveError&) {
            }
        }
    }
    for (int i = 0; i < 5;) {
        Rational k = rng.rational(9, 4);
        if (k.is_zero() || k == Rational(2) || k == Rational(-2)) continue;
        try {
            FamilyInstance inst = ek_curve(k);
            sweep_line(checks, "ek-" + std::to_string(i), std::move(inst));
            ++i;
        } catch (const SingularCurveError&) {
        }
    }
    for (int i = 0; i < 3; ++i)
        sweep_line(checks, "tau-scalene-" + std::to_string(i),
                   triangle_to_tau(random_heron_triangle(rng)));
    for (int i = 0; i < 2; ++i)
        sweep_line(checks, "tau-isosceles-" + std::to_string(i),
                   triangle_to_tau(random_isosceles_triangle(rng)));
    for (int i = 0; i < 3; ++i)
        sweep_line(checks, "alpha-" + std::to_string(i),
                   alpha_curve(rng.rational(9, 4), rng.rational(9, 4)));
    for (int i = 0; i < 2; ++i) {
        Rational k = rng.rational(9, 4);
        if (k.is_zero() || k == Rational(1) || k == Rational(-1)) {
            --i;
            continue;
        }
        try {
            FamilyInstance inst = dtriple_curve(k);
            sweep_line(checks, "dtriple-" + std::to_string(i), std::move(inst));
        } catch (const SingularCurveError&) {
            --i;
        }
    }
    for (int i = 0; i < 5;) {
        try {
            sweep_line(checks, "quad-" + std::to_string(i),
                       quad_to_curve(random_sastry_quad(rng)));
            ++i;
        } catch (const SidesNotDistinctError&) {
        } catch (const SingularCurveError&) {
        }
    }
    for (int i = 0; i < 3;) {
        Rational a = rng.rational(9, 4);
        if (a.is_zero() || a == Rational(1) || a == Rational(-1)) continue;
        sweep_line(checks, "bicentric-generic-" + std::to_string(i), bicentric_curve(a));
        ++i;
    }
    for (int i = 0; i < 2;) {
        Rational r = rng.rational(9, 4);
        if (r.is_zero() || r == Rational(1) || r == Rational(-1)) continue;
        Rational a = bicentric_param(r);
        if (a.is_zero() || a == Rational(1) || a == Rational(-1)) continue;
        sweep_line(checks, "bicentric-param-" + std::to_string(i), bicentric_curve(a));
        ++i;
    }
}

int run_reproduce(const std::string& suite, uint64_t seed, int jobs, bool all, bool json) {
    auto t0 = std::chrono::steady_clock::now();
    if (suite == "table1") return table1_suite(json, all ? kTableOneR.size() : 3, t0);

    if (json)
        std::cout << Json{{"schema", "1"},
                          {"command", "reproduce"},
                          {"suite", suite},
                          {"seed", seed}}
                         .dump()
                  << "\n";
    CheckRunner checks(json);
    if (suite == "examples")
        examples_suite(checks, jobs);
    else if (suite == "torsion-sweep")
        torsion_sweep_suite(checks, seed);
    else
        throw ParseError("unknown suite '" + suite + "' (examples, table1, torsion-sweep)");

    Json summary{{"schema", "1"},
                 {"command", "reproduce"},
                 {"suite", suite},
                 {"checks", checks.total()},
                 {"failed", checks.failures()}};
    if (json)
        std::cout << summary.dump() << "\n";
    else
        std::cout << checks.total() << " check(s), " << checks.failures()
                  << " failure(s), in " << elapsed_ms(t0) << " ms\n";
    return checks.failures() == 0 ? 0 : 1;
}

}  // namespace
}  // namespace heronec

int main(int argc, char** argv) {
    using namespace heronec;

    CLI::App app{"exact elliptic-curve families from Heron triangles and cyclic "
                 "quadrilaterals"};
    app.require_subcommand(1);

    static const std::vector<std::string> kParams = {
        "A", "B", "C", "D", "p", "q", "r", "s", "u", "v",
        "k", "n", "tau", "alpha", "a", "b", "c", "d", "from-r"};

    auto* fam = app.add_subcommand("family", "construct a family instance and check claims");
    std::string family_tag;
    fam->add_option("tag", family_tag, "family name")->required();
    std::map<std::string, std::string> family_vals;
    for (const auto& name : kParams)
        fam->add_option("--" + name, family_vals[name], "family parameter");
    bool check_torsion = false, rank_lb = false, family_json_flag = false;
    int64_t family_bound = 100;
    fam->add_flag("--check-torsion", check_torsion, "compute torsion and verify claims");
    fam->add_flag("--rank-lb", rank_lb, "certify rank lower bounds by point search");
    fam->add_option("--bound", family_bound, "point-search bound for --rank-lb")
        ->check(CLI::PositiveNumber);
    fam->add_flag("--json", family_json_flag, "JSON-lines output");

    auto* search = app.add_subcommand("search", "exhaustive Diophantine searches");
    std::string equation;
    search->add_option("equation", equation, "quartic or sextic")->required();
    int64_t search_bound = 0;
    search->add_option("--bound", search_bound, "max variable value")
        ->required()
        ->check(CLI::PositiveNumber);
    bool include_trivial = false, search_json_flag = false;
    int search_jobs = 1;
    search->add_flag("--include-trivial", include_trivial, "emit trivial solutions too");
    search->add_option("--jobs", search_jobs, "worker threads")->check(CLI::PositiveNumber);
    search->add_flag("--json", search_json_flag, "JSON-lines output");

    auto* rep = app.add_subcommand("reproduce", "run a reproduction suite");
    std::string suite;
    rep->add_option("suite", suite, "examples, table1 or torsion-sweep")->required();
    uint64_t seed = 42;
    int rep_jobs = 1;
    bool rep_all = false, rep_json_flag = false;
    rep->add_option("--seed", seed, "RNG seed for sampled suites");
    rep->add_option("--jobs", rep_jobs, "worker threads")->check(CLI::PositiveNumber);
    rep->add_flag("--all", rep_all, "all table rows instead of the first three");
    rep->add_flag("--json", rep_json_flag, "JSON-lines output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fam->parsed())
            return run_family(family_tag, family_vals, check_torsion, rank_lb, family_bound,
                              family_json_flag);
        if (search->parsed())
            return run_search(equation, search_bound, include_trivial, search_jobs,
                              search_json_flag);
        return run_reproduce(suite, seed, rep_jobs, rep_all, rep_json_flag);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
