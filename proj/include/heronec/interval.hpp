#pragma once

// Directed-rounding interval arithmetic over MPFR. Every operation rounds the
// lower endpoint down and the upper endpoint up, so a computed interval always
// encloses the exact real result. Endpoints carry 128-bit mantissas, far more
// than the certification margins ever need.

#include <mpfr.h>

#include <string>

#include "heronec/exact.hpp"

namespace heronec {

class Interval {
  public:
    static constexpr mpfr_prec_t kPrecision = 128;

    Interval();
    explicit Interval(const Rational& exact);
    Interval(const Rational& lo, const Rational& hi);
    Interval(const Interval& other);
    Interval& operator=(const Interval& other);
    ~Interval();

    // log n with n >= 1, enclosed from both sides
    static Interval log_of(const Integer& n);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;

    // exact division by 2^k
    Interval scaled_down(unsigned long k) const;

    // widen to [lo - pad.hi, hi + pad.hi]; pad must be nonnegative
    Interval padded_by(const Interval& pad) const;

    // clamp into [0, inf); the interval must reach that range
    Interval nonnegative_part() const;

    bool is_exact_zero() const;
    bool contains_zero() const;
    bool is_positive() const;
    bool is_negative() const;

    double lo_double() const;
    double hi_double() const;
    std::string str(int digits = 12) const;

  private:
    mpfr_t lo_, hi_;
};

}  // namespace heronec
