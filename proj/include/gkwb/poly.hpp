#pragma once

#include <map>
#include <optional>

#include "gkwb/rational.hpp"
#include "gkwb/word.hpp"

namespace gkwb {

/// Sparse element of the free algebra: Word -> nonzero Rational.
/// Terms iterate in descending deg-lex order, so begin() is the leading term
/// and printing, hashing and reduction traces are deterministic.
class Poly {
public:
    using TermMap = std::map<Word, Rational, DegLexGreater>;

    explicit Poly(GensPtr gens);

    static Poly zero(GensPtr gens) { return Poly(std::move(gens)); }
    static Poly constant(GensPtr gens, const Rational& c);
    static Poly monomial(GensPtr gens, const Word& w, const Rational& c = Rational(1));
    static Poly generator(GensPtr gens, Letter a);

    const GensPtr& gens() const { return gens_; }
    const TermMap& terms() const { return terms_; }
    // low-level access for the rewrite/elimination engines; callers keep the
    // no-zero-coefficients invariant themselves
    TermMap& mutable_terms() { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;  // zero or a multiple of the unit word
    std::size_t term_count() const { return terms_.size(); }

    // none for the zero element (degree "-infinity")
    std::optional<std::size_t> degree() const;
    std::size_t degree_in(Letter a) const;  // 0 for the zero element

    const Word& leading_word() const;
    const Rational& leading_coeff() const;
    Rational coeff(const Word& w) const;

    void add_term(const Word& w, const Rational& c);
    Poly& add_scaled(const Poly& o, const Rational& c);
    Poly component(std::size_t deg) const;  // homogeneous part of that degree

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    // free product: bilinear extension of word concatenation, no rewriting
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Canonical text: terms in descending deg-lex order, "c*w" factors,
    /// words as `x^2*y*z^3`. The zero element prints as "0".
    std::string to_string() const;

    void check_same_gens(const Poly& o) const;

private:
    GensPtr gens_;
    TermMap terms_;
};

Poly poly_pow(const Poly& a, unsigned e);
Poly commutator(const Poly& a, const Poly& b);

}  // namespace gkwb
