#include "heronec/height.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "heronec/errors.hpp"

namespace heronec {

namespace {

constexpr int kMaxDoublings = 24;
constexpr size_t kCoordinateBitCap = size_t(1) << 25;

Interval log_height_of(const Rational& q) {
    Integer n = abs(q.num());
    const Integer& d = q.den();
    return Interval::log_of(n > d ? n : d);
}

// uniform bound on |hhat(Q) - h(x(Q))| over the whole curve, padded well past
// the sharp constants so the enclosure stays safe
Interval tail_constant(const CurveRef& c) {
    Interval hj = log_height_of(c->j_invariant());
    Interval hd = log_height_of(c->discriminant());
    return hj * Interval(Rational(1, 2)) + hd * Interval(Rational(1, 3)) +
           Interval(Rational(5));
}

size_t order_if_small_torsion(const CurvePoint& p) {
    if (p.is_infinity()) return 1;
    CurvePoint acc = p;
    for (size_t n = 1; n <= 12; ++n) {
        if (acc.is_infinity()) return n;
        acc = add(acc, p);
    }
    return 0;
}

int doublings_for(const Interval& c, const Rational& eps) {
    mpq_class e(eps.num(), eps.den());
    e.canonicalize();
    double target = e.get_d();
    double tail = c.hi_double();
    int n = 0;
    while (tail > target) {
        tail /= 4;
        if (++n > kMaxDoublings)
            throw PrecisionExhaustedError("height tolerance needs more than " +
                                          std::to_string(kMaxDoublings) + " doublings");
    }
    return n;
}

size_t coordinate_bits(const Rational& x) {
    return mpz_sizeinbase(x.num().get_mpz_t(), 2) + mpz_sizeinbase(x.den().get_mpz_t(), 2);
}

Interval det_interval(const std::vector<std::vector<Interval>>& g) {
    size_t n = g.size();
    std::function<Interval(std::vector<size_t>, std::vector<size_t>)> expand =
        [&](std::vector<size_t> rows, std::vector<size_t> cols) -> Interval {
        if (rows.size() == 1) return g[rows[0]][cols[0]];
        Interval sum;
        std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
        for (size_t j = 0; j < cols.size(); ++j) {
            std::vector<size_t> sub_cols;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != j) sub_cols.push_back(cols[t]);
            Interval term = g[rows[0]][cols[j]] * expand(sub_rows, sub_cols);
            sum = (j % 2 == 0) ? sum + term : sum - term;
        }
        return sum;
    };
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    return expand(all, all);
}

std::string relation_string(const std::vector<Integer>& coeffs) {
    std::ostringstream out;
    bool lead = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Integer a = abs(coeffs[i]);
        if (lead) {
            if (sgn(coeffs[i]) < 0) out << "-";
        } else {
            out << (sgn(coeffs[i]) < 0 ? " - " : " + ");
        }
        if (a != 1) out << to_string(a) << "*";
        out << "P" << (i + 1);
        lead = false;
    }
    out << " = O";
    return out.str();
}

}  // namespace

Interval naive_height(const CurvePoint& p) {
    if (p.is_infinity()) return Interval();
    return log_height_of(p.x());
}

Interval canonical_height(const CurvePoint& p, const Rational& target_error) {
    if (target_error.sign() <= 0) throw ConstraintError("height tolerance must be positive");
    if (p.is_infinity()) return Interval();
    if (order_if_small_torsion(p) != 0) return Interval();

    ShortModelMap m = integral_short_model(p.curve());
    CurvePoint q = m.forward(p);
    Interval c = tail_constant(m.target);
    int n = doublings_for(c, target_error);

    for (int i = 0; i < n; ++i) {
        q = add(q, q);
        if (q.is_infinity()) return Interval();
        if (coordinate_bits(q.x()) > kCoordinateBitCap)
            throw PrecisionExhaustedError("doubling step " + std::to_string(i + 1) + " of " +
                                          std::to_string(n) + " overflows the coordinate cap");
    }
    return naive_height(q).padded_by(c).scaled_down(2 * static_cast<unsigned long>(n))
        .nonnegative_part();
}

Interval height_pairing(const CurvePoint& p, const CurvePoint& q,
                        const Rational& target_error) {
    if (!p.curve()->same_model(*q.curve()))
        throw CrossCurveError("height pairing needs points on one curve");
    Interval sum = canonical_height(add(p, q), target_error);
    Interval hp = canonical_height(p, target_error);
    Interval hq = canonical_height(q, target_error);
    return (sum - hp - hq).scaled_down(1);
}

IndependenceReport independence_report(const std::vector<CurvePoint>& points,
                                       const Rational& target_error) {
    size_t k = points.size();
    if (k < 1 || k > 5)
        throw ConstraintError("independence reports cover 1 to 5 points");
    for (size_t i = 1; i < k; ++i)
        if (!points[i].curve()->same_model(*points[0].curve()))
            throw CrossCurveError("independence report needs points on one curve");

    IndependenceReport r;
    r.points = points;

    // a torsion member is a dependency all by itself
    for (size_t i = 0; i < k; ++i) {
        size_t d = order_if_small_torsion(points[i]);
        if (d != 0) {
            r.verdict = "dependent";
            r.relation.assign(k, Integer(0));
            r.relation[i] = Integer(static_cast<unsigned long>(d));
            std::ostringstream out;
            out << "P" << (i + 1) << " is torsion of order " << d << "; "
                << relation_string(r.relation);
            r.detail = out.str();
            for (const auto& p : points) r.heights.push_back(canonical_height(p, target_error));
            return r;
        }
    }

    for (const auto& p : points) r.heights.push_back(canonical_height(p, target_error));
    std::map<std::pair<size_t, size_t>, Interval> sums;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            sums.emplace(std::make_pair(i, j),
                         canonical_height(add(points[i], points[j]), target_error));

    r.gram.assign(k, std::vector<Interval>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (i == j)
                r.gram[i][j] = r.heights[i];
            else {
                const Interval& s = sums.at(std::make_pair(std::min(i, j), std::max(i, j)));
                r.gram[i][j] = (s - r.heights[i] - r.heights[j]).scaled_down(1);
            }
        }
    r.determinant = det_interval(r.gram);

    if (r.determinant.is_positive()) {
        r.verdict = "independent";
        r.detail = "Gram determinant certified positive: " + r.determinant.str();
        return r;
    }
    if (r.determinant.is_negative())
        throw Error("Gram determinant certified negative; height enclosures are inconsistent");

    // determinant straddles zero: hunt for an exact small relation
    std::vector<std::vector<CurvePoint>> multiples;
    for (size_t i = 0; i < k; ++i) {
        std::vector<CurvePoint> row;
        for (long c = -5; c <= 5; ++c) row.push_back(mul(Integer(c), points[i]));
        multiples.push_back(std::move(row));
    }
    std::vector<Integer> coeffs(k, Integer(0));
    std::function<bool(size_t, const CurvePoint&, bool)> dfs =
        [&](size_t idx, const CurvePoint& acc, bool nonzero) -> bool {
        if (idx == k) return nonzero && acc.is_infinity();
        long lo = nonzero ? -5 : 0;  // normalize: leading nonzero coefficient positive
        for (long c = lo; c <= 5; ++c) {
            coeffs[idx] = Integer(c);
            if (dfs(idx + 1, add(acc, multiples[idx][static_cast<size_t>(c + 5)]),
                    nonzero || c != 0))
                return true;
        }
        return false;
    };
    if (dfs(0, CurvePoint::infinity(points[0].curve()), false)) {
        r.verdict = "dependent";
        r.relation = coeffs;
        r.detail = "exact relation verified: " + relation_string(coeffs);
        return r;
    }
    r.verdict = "inconclusive";
    r.detail = "Gram determinant " + r.determinant.str() +
               " straddles zero and no relation with coefficients up to 5 exists";
    return r;
}

}  // namespace heronec
