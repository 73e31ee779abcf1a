#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gkwb {

using BigInt = mpz_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is canonically 0/1. Wraps GMP's mpq type.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(const BigInt& n) : q_(n) {}
    explicit Rational(mpq_class q);

    // accepts "p", "-p", "p/q", "-p/q"
    static Rational from_string(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const;
    Rational inverse() const;
    double to_double() const { return q_.get_d(); }

    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

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

private:
    mpq_class q_;
};

}  // namespace gkwb
