#include "heronec/factor.hpp"

#include <algorithm>

namespace heronec {

namespace {

// Primes below FactorOptions::trial_limit, sieved once on first use.
const std::vector<uint32_t>& small_primes(unsigned long limit) {
    static std::vector<uint32_t> primes;
    static unsigned long sieved = 0;
    if (sieved < limit) {
        primes.clear();
        std::vector<bool> comp(limit, false);
        for (unsigned long i = 2; i < limit; ++i) {
            if (comp[i]) continue;
            primes.push_back(static_cast<uint32_t>(i));
            for (unsigned long j = i * i; j < limit; j += i) comp[j] = true;
        }
        sieved = limit;
    }
    return primes;
}

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, int s) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// Brent's cycle-finding rho.  Returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long iters, uint64_t seed) {
    // deterministic parameter schedule: a simple LCG seeded per round
    uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    };
    Integer c = Integer(next() % 1000003 + 1) % n;
    Integer y = Integer(next() % 1000033 + 2) % n;
    if (sgn(c) == 0) c = 1;
    const unsigned long m = 128;
    Integer g = 1, r = 1, q = 1, x, ys;
    unsigned long spent = 0;
    while (g == 1 && spent < iters) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
        Integer k = 0;
        while (k < r && g == 1 && spent < iters) {
            ys = y;
            unsigned long chunk = std::min<unsigned long>(m, mpz_get_ui(Integer(r - k).get_mpz_t()));
            for (unsigned long i = 0; i < chunk; ++i) {
                y = (y * y + c) % n;
                Integer diff = x - y;
                if (sgn(diff) < 0) diff = -diff;
                q = (q * diff) % n;
            }
            spent += chunk;
            g = gcd(q, n);
            k += chunk;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            Integer diff = x - ys;
            if (sgn(diff) < 0) diff = -diff;
            g = gcd(diff, n);
        } while (g == 1);
    }
    if (g == n || g == 1) return 0;
    return g;
}

void factor_rec(const Integer& n, const FactorOptions& opt, std::vector<Integer>& out, int depth) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    if (depth > 64) throw FactorizationError("factorization recursion overflow at " + to_string(n));
    // perfect power check cheapens rho's job considerably
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                std::vector<Integer> base;
                factor_rec(root, opt, base, depth + 1);
                for (unsigned long i = 0; i < e; ++i)
                    out.insert(out.end(), base.begin(), base.end());
                return;
            }
        }
    }
    for (int round = 0; round < opt.rho_rounds; ++round) {
        Integer g = pollard_brent(n, opt.rho_iters, 0x9e3779b97f4a7c15ull + round);
        if (g != 0) {
            factor_rec(g, opt, out, depth + 1);
            factor_rec(n / g, opt, out, depth + 1);
            return;
        }
    }
    throw FactorizationError("unfactored cofactor " + to_string(n));
}

}  // namespace

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    static const int wits[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int w : wits) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    Integer d = n - 1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (int w : wits)
        if (miller_rabin_witness(n, Integer(w), d, s)) return false;
    // witness set is only proven complete below 3.3e24
    static const Integer kDeterministicLimit("3317044064679887385961981");
    if (n < kDeterministicLimit) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Factorization factorize(const Integer& n, const FactorOptions& opt) {
    if (sgn(n) == 0) throw Error("factorize(0)");
    Integer m = ::abs(n);
    std::vector<Integer> primes;
    if (m > 1) {
        for (uint32_t p : small_primes(opt.trial_limit)) {
            if (Integer(p) * p > m) break;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                primes.push_back(p);
                m /= p;
            }
            if (m == 1) break;
        }
        if (m > 1) factor_rec(m, opt, primes, 0);
    }
    std::sort(primes.begin(), primes.end());
    Factorization out;
    for (const Integer& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<Integer> divisors(const Factorization& f, std::size_t cap) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        if (base * (e + 1) > cap)
            throw FactorizationError("divisor enumeration exceeds cap");
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace heronec
