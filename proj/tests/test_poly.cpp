#include "doctest.h"

#include <algorithm>

#include "heronec/poly.hpp"
#include "heronec/rng.hpp"

using namespace heronec;

namespace {

// expand prod (x - r_i) * lead
IPoly from_roots(const std::vector<Integer>& roots, const Integer& lead) {
    IPoly p{lead};
    for (const Integer& r : roots) p = imul(p, IPoly{-r, 1});
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    IPoly a{1, 2, 3};        // 3x^2+2x+1
    IPoly b{-1, 1};          // x-1
    CHECK(imul(a, b) == IPoly{-1, -1, -1, 3});
    CHECK(iadd(a, iscale(a, Integer(-1))).empty());
    CHECK(degree(iderive(a)) == 1);
    CHECK(ieval(a, Integer(2)) == 17);
    CHECK(sign_at(a, Integer(-1), Integer(2)) == sgn(Integer(3 - 4 + 4)));  // p(-1/2)*4 = 3
}

TEST_CASE("exact division and gcd") {
    IPoly a = imul(IPoly{1, 1}, IPoly{-2, 1});  // (x+1)(x-2)
    CHECK(idivide_exact(a, IPoly{1, 1}) == IPoly{-2, 1});
    CHECK_THROWS(idivide_exact(IPoly{1, 1, 1}, IPoly{1, 1}));
    IPoly g = ipoly_gcd(imul(a, IPoly{5, 1}), imul(a, IPoly{7, 1}));
    CHECK(g == a);  // primitive, positive leading coefficient
}

TEST_CASE("squarefree part drops multiplicity") {
    IPoly p = imul(imul(IPoly{-1, 1}, IPoly{-1, 1}), IPoly{3, 1});  // (x-1)^2 (x+3)
    IPoly sf = squarefree_part(p);
    CHECK(degree(sf) == 2);
    CHECK(sgn(ieval(sf, Integer(1))) == 0);
    CHECK(sgn(ieval(sf, Integer(-3))) == 0);
}

TEST_CASE("integer_roots on constructed products") {
    Rng rng(2001);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> roots;
        int k = static_cast<int>(rng.range(0, 4));
        for (int i = 0; i < k; ++i) roots.push_back(rng.range(-50, 50));
        IPoly p = from_roots(roots, Integer(rng.range(1, 5)));
        // sprinkle an irreducible quadratic to add irrational roots
        if (rng.below(2)) p = imul(p, IPoly{1, 1, 1});
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        CHECK(integer_roots(p) == roots);
    }
}

TEST_CASE("integer_roots with large coefficients and repeated roots") {
    Integer big("123456789123456789123456789");
    IPoly p = imul(from_roots({big, -big, 7}, Integer(3)), from_roots({7}, Integer(1)));
    auto r = integer_roots(p);
    CHECK(r == std::vector<Integer>{-big, 7, big});
    CHECK(integer_roots(IPoly{5}).empty());
    CHECK(integer_roots(IPoly{0, 0, 1}) == std::vector<Integer>{0});
}

TEST_CASE("rational_roots fixed examples") {
    // x^3 - x
    CHECK(rational_roots(IPoly{0, -1, 0, 1}) ==
          std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    // 3x^2 - 27
    CHECK(rational_roots(IPoly{-27, 0, 3}) == std::vector<Rational>{Rational(-3), Rational(3)});
    // 2x - 3
    CHECK(rational_roots(IPoly{-3, 2}) == std::vector<Rational>{Rational(3, 2)});
    // x^2 + 1
    CHECK(rational_roots(IPoly{1, 0, 1}).empty());
}

TEST_CASE("rational_roots agrees with constructed rational roots") {
    Rng rng(2002);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> roots;
        IPoly p{1};
        int k = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < k; ++i) {
            Rational r = rng.rational(20, 8);
            roots.push_back(r);
            p = imul(p, IPoly{-r.num(), r.den()});  // den*x - num
        }
        if (rng.below(2)) p = imul(p, IPoly{2, 0, 3});  // no rational roots
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        CHECK(rational_roots(p) == roots);
    }
}

TEST_CASE("to_ipoly clears denominators minimally") {
    QPoly q{Rational(1, 2), Rational(1, 3)};
    CHECK(to_ipoly(q) == IPoly{3, 2});
    CHECK(to_ipoly(QPoly{}).empty());
}
