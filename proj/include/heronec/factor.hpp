#pragma once

// Integer factorization: deterministic trial division up to a fixed limit,
// then Brent's variant of Pollard rho with a bounded effort budget.  A number
// that survives the budget unfactored is reported as an explicit failure, not
// silently mislabeled as prime.

#include <cstdint>
#include <utility>
#include <vector>

#include "heronec/exact.hpp"

namespace heronec {

struct FactorOptions {
    unsigned long trial_limit = 1000000;  // trial-divide by primes below this
    int rho_rounds = 48;                  // restarts with fresh parameters
    unsigned long rho_iters = 1u << 21;   // iterations per round
};

// Strong-pseudoprime test with the first twelve prime witnesses, which is
// deterministic for n < 3.3e24; larger inputs additionally go through GMP's
// probabilistic test.
bool is_probable_prime(const Integer& n);

// Prime factorization of |n| as (prime, exponent) pairs sorted by prime.
// n must be nonzero; the unit sign is not represented.  Throws
// FactorizationError when the effort budget is exhausted, with the unfactored
// cofactor in the message.
using Factorization = std::vector<std::pair<Integer, int>>;
Factorization factorize(const Integer& n, const FactorOptions& opt = {});

// All positive divisors, ascending.  Throws FactorizationError if the count
// would exceed cap (guards against highly composite inputs in root searches).
std::vector<Integer> divisors(const Factorization& f, std::size_t cap = 2000000);

}  // namespace heronec
