#include "heronec/poly.hpp"

#include <algorithm>
#include <set>

namespace heronec {

int degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

void normalize(IPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void normalize(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

IPoly iadd(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

IPoly isub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

IPoly imul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

IPoly iscale(const IPoly& a, const Integer& c) {
    if (sgn(c) == 0) return {};
    IPoly r = a;
    for (Integer& x : r) x *= c;
    return r;
}

IPoly iderive(const IPoly& a) {
    if (a.size() <= 1) return {};
    IPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Integer(i);
    normalize(r);
    return r;
}

QPoly qadd(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

QPoly qscale(const QPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    QPoly r = a;
    for (Rational& x : r) x *= c;
    return r;
}

Integer ieval(const IPoly& p, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational qeval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const IPoly& p, const Integer& m, const Integer& e) {
    // p(m/e) * e^deg = sum c_i m^i e^(deg-i)
    if (p.empty()) return 0;
    Integer acc = 0, epow = 1;
    std::vector<Integer> epows(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        epows[p.size() - 1 - i] = epow;
        epow *= e;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        Integer mp;
        mpz_pow_ui(mp.get_mpz_t(), m.get_mpz_t(), i);
        acc += p[i] * mp * epows[i];
    }
    return sgn(acc);
}

Integer content(const IPoly& p) {
    Integer g = 0;
    for (const Integer& c : p) g = gcd(g, c);
    return g;  // 0 only for the zero polynomial
}

IPoly primitive_part(const IPoly& p) {
    Integer g = content(p);
    if (sgn(g) == 0) return {};
    IPoly r = p;
    for (Integer& c : r) c /= g;
    return r;
}

namespace {

// f <- lc(g)^t * (f mod g); returns t so callers can fix the sign.
int pseudo_rem_inplace(IPoly& f, const IPoly& g) {
    const Integer& L = g.back();
    int t = 0;
    while (degree(f) >= degree(g) && !f.empty()) {
        Integer top = f.back();
        int shift = degree(f) - degree(g);
        for (Integer& c : f) c *= L;
        for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= top * g[i];
        ++t;
        normalize(f);
    }
    return t;
}

}  // namespace

IPoly ipoly_gcd(const IPoly& a, const IPoly& b) {
    IPoly f = primitive_part(a), g = primitive_part(b);
    if (f.empty()) return g;
    if (g.empty()) return f;
    if (degree(f) < degree(g)) std::swap(f, g);
    while (!g.empty()) {
        IPoly r = f;
        pseudo_rem_inplace(r, g);
        f = g;
        g = primitive_part(r);
    }
    if (sgn(f.back()) < 0) f = iscale(f, Integer(-1));
    return f;
}

IPoly squarefree_part(const IPoly& p) {
    IPoly prim = primitive_part(p);
    if (degree(prim) <= 1) return prim;
    IPoly g = ipoly_gcd(prim, iderive(prim));
    if (degree(g) == 0) return prim;
    return idivide_exact(prim, g);
}

IPoly idivide_exact(const IPoly& a, const IPoly& b) {
    if (b.empty()) throw Error("polynomial division by zero");
    IPoly rem = a;
    normalize(rem);
    if (rem.empty()) return {};
    int dq = degree(rem) - degree(b);
    if (dq < 0) throw Error("inexact polynomial division");
    IPoly q(dq + 1, Integer(0));
    while (degree(rem) >= degree(b) && !rem.empty()) {
        int shift = degree(rem) - degree(b);
        Integer c = rem.back() / b.back();
        if (c * b.back() != rem.back()) throw Error("inexact polynomial division");
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        normalize(rem);
    }
    if (!rem.empty()) throw Error("inexact polynomial division");
    return q;
}

namespace {

std::vector<IPoly> sturm_chain(const IPoly& squarefree) {
    std::vector<IPoly> chain;
    chain.push_back(squarefree);
    IPoly d = iderive(squarefree);
    if (d.empty()) return chain;
    chain.push_back(primitive_part(d));
    while (degree(chain.back()) > 0) {
        IPoly r = chain[chain.size() - 2];
        int t = pseudo_rem_inplace(r, chain.back());
        if (r.empty()) break;
        // the Sturm step wants -(f mod g) up to a positive factor
        int sign_fix = (sgn(chain.back().back()) < 0 && (t % 2)) ? 1 : -1;
        chain.push_back(primitive_part(iscale(r, Integer(sign_fix))));
    }
    return chain;
}

int sign_variations(const std::vector<IPoly>& chain, const Integer& x) {
    int vars = 0, prev = 0;
    for (const IPoly& p : chain) {
        int s = sgn(ieval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

Integer cauchy_bound(const IPoly& p) {
    Integer lead = ::abs(p.back());
    Integer maxc = 0;
    for (const Integer& c : p) {
        Integer a = ::abs(c);
        if (a > maxc) maxc = a;
    }
    return maxc / lead + 2;
}

// divide p by (x - r), exactly
IPoly deflate(const IPoly& p, const Integer& r) {
    IPoly q(p.size() - 1);
    Integer carry = 0;
    for (int i = degree(p); i >= 1; --i) {
        carry = carry * r + p[i];
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace

std::vector<Integer> integer_roots(const IPoly& p) {
    IPoly work = p;
    normalize(work);
    if (work.empty()) throw Error("integer_roots of the zero polynomial");
    std::vector<Integer> roots;
    // strip powers of x
    std::size_t k = 0;
    while (k < work.size() && sgn(work[k]) == 0) ++k;
    if (k > 0) {
        roots.push_back(0);
        work.erase(work.begin(), work.begin() + k);
    }
    IPoly q = squarefree_part(work);
    bool restart = true;
    while (restart && degree(q) >= 1) {
        restart = false;
        if (degree(q) == 1) {
            // root = -c0/c1 when integral
            if (sgn(q[0] % q[1]) == 0) roots.push_back(-q[0] / q[1]);
            break;
        }
        auto chain = sturm_chain(q);
        Integer M = cauchy_bound(q);
        struct Span {
            Integer lo, hi;
            int vlo, vhi;
        };
        std::vector<Span> stack;
        stack.push_back({-M, M, sign_variations(chain, -M), sign_variations(chain, M)});
        while (!stack.empty()) {
            Span s = stack.back();
            stack.pop_back();
            if (s.vlo - s.vhi <= 0) continue;
            if (s.hi - s.lo == 1) {
                if (sgn(ieval(q, s.hi)) == 0) {
                    roots.push_back(s.hi);
                    q = deflate(q, s.hi);
                    restart = true;
                    break;
                }
                continue;  // only irrational/non-integer roots in here
            }
            Integer mid = (s.lo + s.hi) >> 1;
            if (sgn(ieval(q, mid)) == 0) {
                roots.push_back(mid);
                q = deflate(q, mid);
                restart = true;
                break;
            }
            int vmid = sign_variations(chain, mid);
            stack.push_back({s.lo, mid, s.vlo, vmid});
            stack.push_back({mid, s.hi, vmid, s.vhi});
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rational> rational_roots(const IPoly& p, const FactorOptions& opt) {
    IPoly work = p;
    normalize(work);
    if (work.empty()) throw Error("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    std::size_t k = 0;
    while (k < work.size() && sgn(work[k]) == 0) ++k;
    if (k > 0) {
        roots.push_back(Rational(0));
        work.erase(work.begin(), work.begin() + k);
    }
    if (degree(work) == 0) return roots;
    work = primitive_part(work);
    std::vector<Integer> num_divs = divisors(factorize(work.front(), opt));
    std::vector<Integer> den_divs = divisors(factorize(work.back(), opt));
    // Cauchy bound prunes candidates; compare p/q <= M via p <= M q
    Integer M = cauchy_bound(work);
    std::set<Rational> found;
    for (const Integer& num : num_divs) {
        for (const Integer& den : den_divs) {
            if (gcd(num, den) != 1) continue;
            if (num > M * den) continue;
            if (sign_at(work, num, den) == 0) found.insert(Rational(num, den));
            if (sign_at(work, -num, den) == 0) found.insert(Rational(-num, den));
        }
    }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

IPoly to_ipoly(const QPoly& q) {
    Integer l = 1;
    for (const Rational& c : q) {
        Integer d = c.den();
        l = l / gcd(l, d) * d;
    }
    IPoly r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = q[i].num() * (l / q[i].den());
    normalize(r);
    return r;
}

}  // namespace heronec
