#include "heronec/diophantine.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <thread>
#include <tuple>

#include "heronec/errors.hpp"

namespace heronec {

bool operator==(const QuarticSolution& a, const QuarticSolution& b) {
    return a.A == b.A && a.B == b.B && a.C == b.C && a.D == b.D && a.trivial == b.trivial;
}

bool operator<(const QuarticSolution& a, const QuarticSolution& b) {
    return std::tie(a.A, a.B, a.C, a.D) < std::tie(b.A, b.B, b.C, b.D);
}

bool operator==(const SexticSolution& a, const SexticSolution& b) {
    return a.u == b.u && a.v == b.v && a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s &&
           a.trivial == b.trivial;
}

bool operator<(const SexticSolution& a, const SexticSolution& b) {
    return std::tie(a.u, a.v, a.p, a.q, a.r, a.s) < std::tie(b.u, b.v, b.p, b.q, b.r, b.s);
}

namespace {

long small_bound(const Integer& bound, long cap, const char* what) {
    if (sgn(bound) <= 0) throw ConstraintError(std::string(what) + " bound must be >= 1");
    if (bound > cap)
        throw ConstraintError(std::string(what) + " bound " + to_string(bound) +
                              " exceeds the desk-scale cap " + std::to_string(cap));
    return bound.get_si();
}

int clamp_jobs(int jobs) {
    if (jobs < 1) jobs = 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && jobs > static_cast<int>(hw)) jobs = static_cast<int>(hw);
    return jobs;
}

// runs fn(shard) on jobs threads over shards 0..count-1; shards are disjoint
// so only the final merge has to care about ordering
template <typename Fn>
void run_sharded(long count, int jobs, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&fn, count, jobs, w] {
            for (long i = w; i < count; i += jobs) fn(i);
        });
    for (auto& t : workers) t.join();
}

struct SumEntry {
    uint64_t val;
    uint32_t lo, hi;
};

bool quartic_trivial(long a, long b, long c, long d) {
    return a == d || b == c || (a == b && d == c) || (a == c && d == b);
}

void verify_quartic(const QuarticSolution& q) {
    if (pow(q.A, 4) + pow(q.D, 4) != Integer(2) * (pow(q.B, 4) + pow(q.C, 4)))
        throw Error("quartic self-check failed");
}

void verify_sextic(const SexticSolution& x) {
    Integer lhs = pow(x.u, 6) + pow(x.v, 6) + pow(x.p, 6) + pow(x.q, 6);
    if (lhs != Integer(2) * (pow(x.r, 6) + pow(x.s, 6)) || x.u * x.v != x.p * x.q)
        throw Error("sextic self-check failed");
}

}  // namespace

std::vector<QuarticSolution> search_quartic(const Integer& bound, bool include_trivial,
                                            int jobs) {
    long n = small_bound(bound, 3000, "quartic");
    jobs = clamp_jobs(jobs);

    std::vector<uint64_t> p4(n + 1);
    for (long i = 0; i <= n; ++i) {
        uint64_t sq = static_cast<uint64_t>(i) * i;
        p4[i] = sq * sq;
    }
    std::vector<SumEntry> sums;
    sums.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (long b = 1; b <= n; ++b)
        for (long c = b; c <= n; ++c)
            sums.push_back({2 * (p4[b] + p4[c]), static_cast<uint32_t>(b),
                            static_cast<uint32_t>(c)});
    std::sort(sums.begin(), sums.end(), [](const SumEntry& a, const SumEntry& b) {
        return std::tie(a.val, a.lo, a.hi) < std::tie(b.val, b.lo, b.hi);
    });

    std::vector<std::vector<QuarticSolution>> found(n + 1);
    run_sharded(n, jobs, [&](long shard) {
        long d = shard + 1;
        for (long a = 1; a <= d; ++a) {
            uint64_t t = p4[a] + p4[d];
            auto lo = std::lower_bound(sums.begin(), sums.end(), t,
                                       [](const SumEntry& e, uint64_t v) { return e.val < v; });
            for (auto it = lo; it != sums.end() && it->val == t; ++it) {
                QuarticSolution sol{Integer(a), Integer(it->lo), Integer(it->hi), Integer(d),
                                    quartic_trivial(a, it->lo, it->hi, d)};
                verify_quartic(sol);
                found[d].push_back(std::move(sol));
            }
        }
    });

    std::vector<QuarticSolution> out;
    for (auto& chunk : found)
        for (auto& sol : chunk)
            if (include_trivial || !sol.trivial) out.push_back(std::move(sol));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SexticSolution> search_sextic(const Integer& bound, bool include_trivial, int jobs) {
    long n = small_bound(bound, 1000, "sextic");
    jobs = clamp_jobs(jobs);

    std::vector<uint64_t> p6(n + 1);
    for (long i = 0; i <= n; ++i) {
        uint64_t sq = static_cast<uint64_t>(i) * i;
        p6[i] = sq * sq * sq;
    }

    // target table: r^6 + s^6 for r <= s
    std::vector<SumEntry> targets;
    targets.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (long r = 1; r <= n; ++r)
        for (long s = r; s <= n; ++s)
            targets.push_back(
                {p6[r] + p6[s], static_cast<uint32_t>(r), static_cast<uint32_t>(s)});
    std::sort(targets.begin(), targets.end(), [](const SumEntry& a, const SumEntry& b) {
        return std::tie(a.val, a.lo, a.hi) < std::tie(b.val, b.lo, b.hi);
    });

    // pairs grouped by product, each group sorted lexicographically
    std::vector<SumEntry> pairs;  // val = product
    pairs.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (long u = 1; u <= n; ++u)
        for (long v = u; v <= n; ++v)
            pairs.push_back({static_cast<uint64_t>(u) * v, static_cast<uint32_t>(u),
                             static_cast<uint32_t>(v)});
    std::sort(pairs.begin(), pairs.end(), [](const SumEntry& a, const SumEntry& b) {
        return std::tie(a.val, a.lo, a.hi) < std::tie(b.val, b.lo, b.hi);
    });
    std::vector<std::pair<size_t, size_t>> groups;  // [begin, end) runs of equal product
    for (size_t i = 0; i < pairs.size();) {
        size_t j = i;
        while (j < pairs.size() && pairs[j].val == pairs[i].val) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    std::vector<std::vector<SexticSolution>> found(groups.size());
    run_sharded(static_cast<long>(groups.size()), jobs, [&](long shard) {
        auto [gb, ge] = groups[shard];
        for (size_t i = gb; i < ge; ++i)
            for (size_t j = i; j < ge; ++j) {
                uint64_t t = p6[pairs[i].lo] + p6[pairs[i].hi] + p6[pairs[j].lo] + p6[pairs[j].hi];
                if (t % 2 != 0) continue;
                uint64_t half = t / 2;
                auto lo =
                    std::lower_bound(targets.begin(), targets.end(), half,
                                     [](const SumEntry& e, uint64_t v) { return e.val < v; });
                for (auto it = lo; it != targets.end() && it->val == half; ++it) {
                    SexticSolution sol{Integer(pairs[i].lo), Integer(pairs[i].hi),
                                       Integer(pairs[j].lo), Integer(pairs[j].hi),
                                       Integer(it->lo),     Integer(it->hi),
                                       i == j};
                    verify_sextic(sol);
                    found[shard].push_back(std::move(sol));
                }
            }
    });

    std::vector<SexticSolution> out;
    for (auto& chunk : found)
        for (auto& sol : chunk)
            if (include_trivial || !sol.trivial) out.push_back(std::move(sol));
    std::sort(out.begin(), out.end());
    return out;
}

DTripleReport is_d_triple(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& n) {
    DTripleReport rep;
    rep.ab = radical(a * b + n);
    rep.ac = radical(a * c + n);
    rep.bc = radical(b * c + n);
    rep.is_triple = rep.ab.root && rep.ac.root && rep.bc.root;
    return rep;
}

std::vector<CurvePoint> point_search(const CurveRef& curve, const Integer& height_bound) {
    long h = small_bound(height_bound, 10000, "point search");
    ShortModelMap map = integral_short_model(curve);
    const WeierstrassCurve& c = *map.target;
    Integer A = c.a2().num(), B = c.a4().num(), C = c.a6().num();

    std::set<CurvePoint> points;
    std::set<Rational> seen;
    for (long e = 1; static_cast<long>(e) * e <= h; ++e) {
        Integer e2 = Integer(e) * e;
        Integer Ae2 = A * e2, Be4 = B * e2 * e2, Ce6 = C * e2 * e2 * e2;
        for (long m = -h; m <= h; ++m) {
            Rational x(Integer(m), e2);
            if (!seen.insert(x).second) continue;
            // y^2 e^6 = m^3 + A m^2 e^2 + B m e^4 + C e^6 must be a square
            Integer num = ((Integer(m) + Ae2) * m + Be4) * m + Ce6;
            if (sgn(num) < 0) continue;
            SqrtResult root = integer_sqrt(num);
            if (!root.exact) continue;
            Rational y(root.root, e2 * e);
            points.insert(map.backward(CurvePoint(map.target, x, y)));
            if (!y.is_zero()) points.insert(map.backward(CurvePoint(map.target, x, -y)));
        }
    }
    return std::vector<CurvePoint>(points.begin(), points.end());
}

}  // namespace heronec
