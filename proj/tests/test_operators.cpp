#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "gkwb/errors.hpp"
#include "gkwb/linalg.hpp"
#include "gkwb/operators.hpp"
#include "gkwb/parser.hpp"

using namespace gkwb;

namespace {

const Presentation& alg_a() {
    static Presentation pres = Presentation::make_A();
    return pres;
}

Poly P(const char* text) {
    return parse_expr(text, alg_a().gens());
}

Poly nfP(const char* text) {
    return alg_a().nf(P(text));
}

}  // namespace

TEST_CASE("operator tokens round trip") {
    for (const auto& tag : {OperatorTag::ry(), OperatorTag::lx(0), OperatorTag::lx(7),
                            OperatorTag::ad_x(2), OperatorTag::rad_z(3)})
        CHECK(OperatorTag::from_token(tag.token()) == tag);
    CHECK(OperatorTag::ry().token() == "Ry");
    CHECK(OperatorTag::lx(2).token() == "Lx:2");
    CHECK_THROWS_AS(OperatorTag::from_token("Zz"), UsageError);
    CHECK_THROWS_AS(OperatorTag::from_token("Lx:"), UsageError);
    CHECK_THROWS_AS(OperatorTag::from_token("Lx:abc"), UsageError);
}

TEST_CASE("basic operator actions") {
    const auto& pres = alg_a();
    CHECK(apply_op(OperatorTag::ry(), nfP("x^2"), pres) == nfP("2*x"));
    // M-fold Lx:0 on y^M leaves M!
    Poly w = nfP("y^3");
    for (int t = 0; t < 3; ++t) w = apply_op(OperatorTag::lx(0), w, pres);
    CHECK(w == pres.constant(Rational(6)));
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(apply_op(OperatorTag::ry(), pres.xz_power(k), pres).is_zero());
    CHECK_THROWS_AS(apply_op(OperatorTag::ad_x(2), pres.one(), pres), UsageError);
}

TEST_CASE("power identity suite") {
    auto report = power_identity_suite(alg_a(), 8);
    CHECK(report.cases == 9 * 8);  // eight equation checks per k
    CHECK(report.all_pass());
    // two spot values from the k = 1 and k = 3 rows
    const auto& pres = alg_a();
    CHECK(apply_op(OperatorTag::ry(), nfP("x"), pres) == pres.one());
    Poly lhs = pres.nf_mul(nfP("x"), pres.xz_power(1)) - pres.nf_mul(pres.xz_power(1), nfP("x"));
    CHECK(lhs == pres.nf(P("-1") - P("y*x") - P("y*z")));
    CHECK(pres.nf_mul(nfP("y^3"), nfP("z")) - pres.nf_mul(nfP("z"), nfP("y^3")) == nfP("3*y^2"));
}

TEST_CASE("orbit of x^2 z under the right bracket") {
    const auto& pres = alg_a();
    auto orbit = ry_orbit(nfP("x^2*z"), pres);
    REQUIRE(orbit.size() == 5);
    CHECK(orbit[1] == nfP("-x^2 + 2*x*z"));
    CHECK(orbit[2] == nfP("-4*x + 2*z"));
    CHECK(orbit[3] == pres.constant(Rational(-6)));  // 3!(-1)^1
    CHECK(orbit[4].is_zero());
}

TEST_CASE("kernel elements have trivial orbits") {
    auto orbit = ry_orbit(nfP("y^5"), alg_a());
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[1].is_zero());
}

TEST_CASE("exhaustive monomial orbit endpoints") {
    auto report = identity_suite(4, 4, 2, alg_a());
    CHECK(report.all_pass());
    CHECK(report.cases == 45);  // sum over N<=4 of (N+1) choices of k, times p<=2
}

TEST_CASE("orbit endpoints of general combinations") {
    const auto& pres = alg_a();
    // alternating sums all zero force a zero endpoint: x + z has 1 - 1 = 0
    std::vector<std::vector<Rational>> alpha{{Rational(1), Rational(1)}};
    CHECK(ry_endpoint_matches(alpha, 1, 0, pres));
    Poly xpz = nfP("x + z");
    CHECK(apply_op(OperatorTag::ry(), xpz, pres).is_zero());

    // alternating sums forced to zero: x^2 + 2xz + z^2 dies after two steps
    std::vector<std::vector<Rational>> balanced{{Rational(1), Rational(2), Rational(1)}};
    CHECK(ry_endpoint_matches(balanced, 2, 0, pres));
    Poly w2 = nfP("x^2 + 2*x*z + z^2");
    Poly it = apply_op(OperatorTag::ry(), apply_op(OperatorTag::ry(), w2, pres), pres);
    CHECK(it.is_zero());

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 25; ++iter) {
        unsigned big_n = 1 + static_cast<unsigned>(rng() % 3);
        unsigned big_m = static_cast<unsigned>(rng() % 3);
        std::vector<std::vector<Rational>> a(big_m + 1,
                                             std::vector<Rational>(big_n + 1, Rational(0)));
        for (auto& row : a)
            for (auto& c : row) c = Rational(static_cast<long>(rng() % 7) - 3);
        CHECK(ry_endpoint_matches(a, big_n, big_m, pres));
    }
}

TEST_CASE("z^k x decomposition") {
    const auto& pres = alg_a();
    auto parts1 = zkx_decompose(1, pres);
    CHECK(parts1.tail == nfP("y*z"));
    for (unsigned k = 1; k <= 6; ++k) {
        auto parts = zkx_decompose(k, pres);  // throws if the tail contains x
        CHECK(parts.head + parts.tail == pres.nf_mul(pres.nf_pow(nfP("z"), k), nfP("x")));
        CHECK(yz_power_coeffs_positive(k, pres));
    }
    CHECK_THROWS_AS(zkx_decompose(0, pres), UsageError);
}

TEST_CASE("raising-step identity") {
    const auto& pres = alg_a();
    CHECK(xz_raising_step_holds(2, 0, 0, 0, pres));
    CHECK(xz_raising_step_holds(3, 1, 1, 2, pres));
    // s = 0 kills both correction terms; spot-check a row of them
    for (unsigned k = 0; k <= 2; ++k) CHECK(xz_raising_step_holds(3, 0, k, 1, pres));
    CHECK_THROWS_AS(xz_raising_step_holds(2, 2, 0, 0, pres), UsageError);
    auto report = identity_suite(6, 3, 2, alg_a());
    CHECK(report.all_pass());
}

TEST_CASE("weighted bracket closed form on the kernel family") {
    const auto& pres = alg_a();
    // the one exceptional vanishing point: constants under Lx:0
    CHECK(apply_op(OperatorTag::lx(0), pres.one(), pres).is_zero());
    CHECK(lx_action_closed_form_holds(0, 0, 0, pres));
    // Lx:1 on x+z lands on -1
    CHECK(apply_op(OperatorTag::lx(1), pres.nf(P("x+z")), pres) == pres.constant(Rational(-1)));
    CHECK(lx_action_closed_form_holds(0, 1, 1, pres));
    auto report = identity_suite(7, 4, 0, pres);
    CHECK(report.cases == 125);
    CHECK(report.all_pass());
}

TEST_CASE("operators are linear") {
    const auto& pres = alg_a();
    std::mt19937_64 rng(13);
    auto random_nf = [&] {
        Poly p = Poly::zero(pres.gens());
        for (int t = 0; t < 3; ++t) {
            std::vector<Letter> ls(rng() % 4);
            for (auto& l : ls) l = static_cast<Letter>(rng() % 3);
            std::sort(ls.begin(), ls.end());
            p.add_term(Word{std::move(ls)}, Rational(static_cast<long>(rng() % 7) - 3));
        }
        return p;
    };
    for (const auto& tag : {OperatorTag::ry(), OperatorTag::lx(0), OperatorTag::lx(2)}) {
        for (int iter = 0; iter < 30; ++iter) {
            Poly u = random_nf(), v = random_nf();
            Rational a(static_cast<long>(rng() % 5) - 2), b(static_cast<long>(rng() % 5) - 2);
            Poly lhs = apply_op(tag, pres.nf(a * u + b * v), pres);
            Poly rhs = a * apply_op(tag, u, pres) + b * apply_op(tag, v, pres);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("operator values stay in the two-sided ideal") {
    const auto& pres = alg_a();
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Letter> ls(1 + rng() % 2);
        for (auto& l : ls) l = static_cast<Letter>(rng() % 3);
        std::sort(ls.begin(), ls.end());
        Poly w = Poly::monomial(pres.gens(), Word{ls});
        w.add_term(Word::unit(), Rational(static_cast<long>(rng() % 3) - 1));
        if (w.is_zero()) continue;
        // span of a*w*b over short contexts
        PolySpan span;
        for (unsigned da = 0; da <= 2; ++da)
            for (const Word& a : sorted_words_of_degree(*pres.gens(), da))
                for (unsigned db = 0; db <= 2; ++db)
                    for (const Word& b : sorted_words_of_degree(*pres.gens(), db))
                        span.insert(pres.nf_mul(pres.nf_mul(Poly::monomial(pres.gens(), a), w),
                                                Poly::monomial(pres.gens(), b)));
        for (const auto& tag : {OperatorTag::ry(), OperatorTag::lx(0), OperatorTag::lx(1)})
            CHECK(span.contains(apply_op(tag, w, pres)));
    }
}

TEST_CASE("right-bracket orbits terminate within the x,z-degree") {
    const auto& pres = alg_a();
    for (unsigned d = 0; d <= 6; ++d) {
        for (const Word& w : sorted_words_of_degree(*pres.gens(), d)) {
            Poly p = Poly::monomial(pres.gens(), w);
            std::size_t xz = xz_degree(p, pres);
            auto orbit = ry_orbit(p, pres);
            CHECK(orbit.size() == xz + 2);  // last nonzero after exactly xz steps
        }
    }
}

TEST_CASE("nonvanishing of the weighted bracket off the exceptional point") {
    const auto& pres = alg_a();
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 60; ++iter) {
        XZBasisElem e;
        for (int t = 0; t < 3; ++t) {
            XZKey k{0, static_cast<unsigned>(rng() % 5), static_cast<unsigned>(rng() % 5)};
            e.add(k, Rational(static_cast<long>(rng() % 7) - 3));
        }
        Poly w = pres.from_xz_basis(e);
        if (w.is_zero()) continue;
        unsigned j = static_cast<unsigned>(rng() % 5);
        if (w.is_scalar() && j == 0) continue;  // the exceptional case
        CHECK(!apply_op(OperatorTag::lx(j), w, pres).is_zero());
    }
}

TEST_CASE("auxiliary stripping in A_2") {
    Presentation a2 = Presentation::make_An(2);
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 15; ++iter) {
        Poly w = Poly::zero(a2.gens());
        for (int t = 0; t < 3; ++t) {
            std::vector<Letter> ls(rng() % 4);
            for (auto& l : ls) l = static_cast<Letter>(rng() % 5);
            std::sort(ls.begin(), ls.end());
            w.add_term(Word{std::move(ls)}, Rational(static_cast<long>(rng() % 5) - 2));
        }
        if (w.is_zero()) continue;
        const Letter z2 = a2.aux_z(2);
        const std::size_t d = w.degree_in(z2);
        Poly stripped = w;
        for (std::size_t t = 0; t < d; ++t)
            stripped = apply_op(OperatorTag::ad_x(2), stripped, a2);
        // d! times the top z2 layer with the z2 letters removed
        Poly expected = Poly::zero(a2.gens());
        for (const auto& [u, c] : w.terms()) {
            if (u.count(z2) != d) continue;
            std::vector<Letter> kept;
            for (Letter l : u.letters)
                if (l != z2) kept.push_back(l);
            expected.add_term(Word{std::move(kept)}, c * Rational(factorial(d)));
        }
        CHECK(stripped == expected);
    }
}
