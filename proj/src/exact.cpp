#include "heronec/exact.hpp"

#include <cctype>

namespace heronec {

Integer parse_integer(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("integer literal '" + s + "' has no digits");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad integer literal '" + s + "'");
    return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

SqrtResult integer_sqrt(const Integer& n) {
    if (sgn(n) < 0) throw Error("integer_sqrt of negative value " + to_string(n));
    SqrtResult r;
    Integer rem;
    mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    r.exact = (sgn(rem) == 0);
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("rational literal '" + s + "' has zero denominator");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign() < 0) r.q_ = -r.q_;
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), e);
    return Rational(num, den);  // already reduced, ctor just normalizes sign
}

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::optional<Rational> rational_square_root(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    // num/den coprime, so q is a square in Q iff both parts are squares in Z
    SqrtResult n = integer_sqrt(q.num());
    if (!n.exact) return std::nullopt;
    SqrtResult d = integer_sqrt(q.den());
    if (!d.exact) return std::nullopt;
    return Rational(n.root, d.root);
}

}  // namespace heronec
