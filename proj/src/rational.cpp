#include "gkwb/rational.hpp"

#include "gkwb/errors.hpp"

namespace gkwb {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational::Rational(long n, long d) {
    if (d == 0) throw UsageError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (sgn(d) == 0) throw UsageError("rational with zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw UsageError("empty rational literal");
    std::string s(text);
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw UsageError("bad rational literal: " + s);
    try {
        mpq_class q(s, 10);
        q.canonicalize();
        if (sgn(q.get_den()) == 0) throw UsageError("rational with zero denominator: " + s);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad rational literal: " + s);
    }
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign() < 0) r.q_ = -r.q_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

}  // namespace gkwb
