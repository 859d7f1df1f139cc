#pragma once

// Exact arithmetic layer: arbitrary-precision integers and eagerly normalized
// rationals, both backed by GMP.  Everything downstream (curves, heights,
// searches) goes through these types, so no floating point sneaks into the
// algebra.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "heronec/errors.hpp"

namespace heronec {

using Integer = mpz_class;

// Decimal parse/print.  parse_integer accepts an optional leading '-' and
// digits only; no whitespace, no base prefixes.
Integer parse_integer(const std::string& s);
std::string to_string(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

// Floor square root together with an exactness flag.  Negative input is a
// caller bug and is rejected.
struct SqrtResult {
    Integer root;
    bool exact;
};
SqrtResult integer_sqrt(const Integer& n);

// Rational with invariants enforced on every construction path: denominator
// positive, gcd(num, den) = 1, zero stored as 0/1.  Arithmetic results stay
// canonical because both operands are.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    // "p/q" or plain "p"; the printed form is parseable back.
    static Rational parse(const std::string& s);
    std::string str() const;

    Integer num() const { return Integer(q_.get_num()); }
    Integer den() const { return Integer(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned long e);
Integer pow(const Integer& base, unsigned long e);

// Exact square root in Q: returns the nonnegative root when q is a square of
// a rational, nullopt otherwise (including all negative q).
std::optional<Rational> rational_square_root(const Rational& q);

}  // namespace heronec
