#include "heronec/interval.hpp"

#include <sstream>

#include "heronec/errors.hpp"

namespace heronec {

namespace {

void set_from_rational(mpfr_t out, const Rational& v, mpfr_rnd_t rnd) {
    mpq_class q(v.num(), v.den());
    q.canonicalize();
    mpfr_set_q(out, q.get_mpq_t(), rnd);
}

}  // namespace

Interval::Interval() {
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& exact) : Interval() {
    set_from_rational(lo_, exact, MPFR_RNDD);
    set_from_rational(hi_, exact, MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi) : Interval() {
    if (lo > hi) throw Error("interval endpoints out of order");
    set_from_rational(lo_, lo, MPFR_RNDD);
    set_from_rational(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::log_of(const Integer& n) {
    if (sgn(n) <= 0) throw Error("log_of needs a positive integer");
    Interval r;
    mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
    mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r;
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r;
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r;
    mpfr_t t;
    mpfr_init2(t, kPrecision);
    const mpfr_t* mine[2] = {&lo_, &hi_};
    const mpfr_t* theirs[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, *mine[i], *theirs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *mine[i], *theirs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::scaled_down(unsigned long k) const {
    Interval r;
    mpfr_div_2ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_div_2ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

Interval Interval::padded_by(const Interval& pad) const {
    if (mpfr_sgn(pad.hi_) < 0) throw Error("padding width must be nonnegative");
    Interval r;
    mpfr_sub(r.lo_, lo_, pad.hi_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, pad.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::nonnegative_part() const {
    if (mpfr_sgn(hi_) < 0) throw Error("interval lies entirely below zero");
    Interval r(*this);
    if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    return r;
}

bool Interval::is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::str(int digits) const {
    std::ostringstream out;
    out.precision(digits);
    out << "[" << lo_double() << ", " << hi_double() << "]";
    return out.str();
}

}  // namespace heronec
