#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gkwb/errors.hpp"
#include "gkwb/parser.hpp"

using namespace gkwb;

namespace {

GensPtr xyz() {
    static GensPtr g = make_gens({"x", "y", "z"});
    return g;
}

const Letter X = 0, Y = 1, Z = 2;

Word W(std::initializer_list<Letter> ls) {
    return Word{std::vector<Letter>(ls)};
}

Poly mono(const Word& w, long c = 1) {
    return Poly::monomial(xyz(), w, Rational(c));
}

}  // namespace

TEST_CASE("bracket sugar") {
    CHECK(parse_expr("[x,y]", xyz()) == mono(W({X, Y})) - mono(W({Y, X})));
}

TEST_CASE("powers expand freely") {
    CHECK(parse_expr("(x+z)^2", xyz()) ==
          mono(W({X, X})) + mono(W({X, Z})) + mono(W({Z, X})) + mono(W({Z, Z})));
    CHECK(parse_expr("x^0", xyz()) == Poly::constant(xyz(), Rational(1)));
}

TEST_CASE("rational coefficients") {
    Poly expected = Poly::monomial(xyz(), W({X, Y, Y}), Rational(3, 2)) +
                    Poly::constant(xyz(), Rational(-1));
    CHECK(parse_expr("3/2*x*y^2 - 1", xyz()) == expected);
}

TEST_CASE("noncommutativity is respected before reduction") {
    CHECK(parse_expr("x*z", xyz()) != parse_expr("z*x", xyz()));
    // parenthesization associates as written
    CHECK(parse_expr("x*(y*z)", xyz()) == parse_expr("(x*y)*z", xyz()));
}

TEST_CASE("leading minus") {
    CHECK(parse_expr("-x + y", xyz()) == mono(W({X}), -1) + mono(W({Y})));
    CHECK(parse_expr("-3", xyz()) == Poly::constant(xyz(), Rational(-3)));
}

TEST_CASE("errors carry byte offsets") {
    try {
        parse_expr("x + ", xyz());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
    try {
        parse_expr("x*w", xyz());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);  // unknown generator 'w'
    }
    CHECK_THROWS_AS(parse_expr("x^-1", xyz()), ParseError);
    CHECK_THROWS_AS(parse_expr("x y", xyz()), ParseError);   // no juxtaposition
    CHECK_THROWS_AS(parse_expr("2x", xyz()), ParseError);
    CHECK_THROWS_AS(parse_expr("(x", xyz()), ParseError);
    CHECK_THROWS_AS(parse_expr("[x,y", xyz()), ParseError);
    CHECK_THROWS_AS(parse_expr("", xyz()), ParseError);
}

TEST_CASE("multi-character identifiers") {
    GensPtr g = make_gens({"x1", "x2", "y", "z1", "z2"});
    Poly p = parse_expr("x2*z1 - 1/3", g);
    Poly expected = Poly::monomial(g, Word{{1, 3}}) + Poly::constant(g, Rational(-1, 3));
    CHECK(p == expected);
}

TEST_CASE("parse of canonical printing is the identity") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        Poly p = Poly::zero(xyz());
        int terms = static_cast<int>(rng() % 5);
        for (int t = 0; t < terms; ++t) {
            std::size_t len = rng() % 5;
            std::vector<Letter> ls(len);
            for (auto& l : ls) l = static_cast<Letter>(rng() % 3);
            long num = static_cast<long>(rng() % 13) - 6;
            long den = 1 + static_cast<long>(rng() % 4);
            p.add_term(Word{std::move(ls)}, Rational(num, den));
        }
        CHECK(parse_expr(p.to_string(), xyz()) == p);
    }
}

TEST_CASE("parse_word accepts only monic monomials") {
    CHECK(parse_word("x*y^2", xyz()) == W({X, Y, Y}));
    CHECK_THROWS_AS(parse_word("2*x", xyz()), UsageError);
    CHECK_THROWS_AS(parse_word("x+y", xyz()), UsageError);
}
