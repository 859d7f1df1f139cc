#pragma once

// Seeded randomness for sweeps and property tests.  mt19937_64 has a
// standard-pinned sequence; the bounded mappings below are written out by
// hand because std::uniform_int_distribution is implementation-defined and
// would break byte-identical reproduction across toolchains.

#include <cstdint>
#include <random>

#include "heronec/exact.hpp"

namespace heronec {

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    // uniform-ish on [0, n); modulo bias is irrelevant here, determinism is not
    int64_t below(int64_t n) { return static_cast<int64_t>(eng_() % static_cast<uint64_t>(n)); }

    int64_t range(int64_t lo, int64_t hi) { return lo + below(hi - lo + 1); }

    // nonzero numerator in [-max_num, max_num], denominator in [1, max_den]
    Rational rational(int64_t max_num, int64_t max_den) {
        int64_t num = 0;
        while (num == 0) num = range(-max_num, max_num);
        return Rational(Integer(num), Integer(range(1, max_den)));
    }

    Rational positive_rational(int64_t max_num, int64_t max_den) {
        return Rational(Integer(range(1, max_num)), Integer(range(1, max_den)));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace heronec
