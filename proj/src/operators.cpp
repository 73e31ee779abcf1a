#include "gkwb/operators.hpp"

#include <charconv>

#include "gkwb/errors.hpp"

namespace gkwb {

std::string OperatorTag::token() const {
    switch (kind) {
        case Kind::ry: return "Ry";
        case Kind::lx: return "Lx:" + std::to_string(param);
        case Kind::ad_x: return "AdX:" + std::to_string(param);
        case Kind::rad_z: return "RadZ:" + std::to_string(param);
    }
    throw InternalError("unreachable operator kind");
}

OperatorTag OperatorTag::from_token(std::string_view token) {
    if (token == "Ry") return ry();
    auto parse_param = [&](std::string_view rest) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc{} || ptr != rest.data() + rest.size())
            throw UsageError("bad operator token: " + std::string(token));
        return v;
    };
    if (token.rfind("Lx:", 0) == 0) return lx(parse_param(token.substr(3)));
    if (token.rfind("AdX:", 0) == 0) return ad_x(parse_param(token.substr(4)));
    if (token.rfind("RadZ:", 0) == 0) return rad_z(parse_param(token.substr(5)));
    throw UsageError("bad operator token: " + std::string(token));
}

Poly apply_op(const OperatorTag& tag, const Poly& w, const Presentation& pres) {
    switch (tag.kind) {
        case OperatorTag::Kind::ry: {
            Poly y = pres.gen_poly(pres.y_role());
            return pres.nf_mul(w, y) - pres.nf_mul(y, w);
        }
        case OperatorTag::Kind::lx: {
            Poly x = pres.gen_poly(pres.x_role());
            Poly y = pres.gen_poly(pres.y_role());
            Poly out = pres.nf_mul(x, w) - pres.nf_mul(w, x);
            if (tag.param != 0)
                out += Rational(static_cast<long>(tag.param)) * pres.nf_mul(y, w);
            return out;
        }
        case OperatorTag::Kind::ad_x: {
            Poly xi = pres.gen_poly(pres.aux_x(tag.param));
            return pres.nf_mul(xi, w) - pres.nf_mul(w, xi);
        }
        case OperatorTag::Kind::rad_z: {
            Poly zi = pres.gen_poly(pres.aux_z(tag.param));
            return pres.nf_mul(w, zi) - pres.nf_mul(zi, w);
        }
    }
    throw InternalError("unreachable operator kind");
}

std::size_t xz_degree(const Poly& p, const Presentation& pres) {
    std::size_t d = 0;
    for (const auto& [w, c] : p.terms())
        d = std::max(d, w.count(pres.x_role()) + w.count(pres.z_role()));
    return d;
}

namespace {

Poly nf_commutator(const Poly& a, const Poly& b, const Presentation& pres) {
    return pres.nf_mul(a, b) - pres.nf_mul(b, a);
}

// c * base^{k-1}, with the k = 0 convention making it 0
Poly scaled_predecessor_power(long c, const Poly& base, unsigned k, const Presentation& pres) {
    if (k == 0) return Poly::zero(pres.gens());
    return Rational(c) * pres.nf_pow(base, k - 1);
}

void check_identity(IdentityReport& report, const std::string& params, const Poly& lhs,
                    const Poly& rhs) {
    ++report.cases;
    if (lhs != rhs)
        report.failures.push_back(
            {params, "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string()});
}

}  // namespace

IdentityReport power_identity_suite(const Presentation& pres, unsigned kmax) {
    IdentityReport report;
    report.suite = 2;
    const Poly x = pres.gen_poly(pres.x_role());
    const Poly y = pres.gen_poly(pres.y_role());
    const Poly z = pres.gen_poly(pres.z_role());
    const Poly xz = pres.nf(x + z);
    const Poly yz = pres.nf(y + z);
    for (unsigned k = 0; k <= kmax; ++k) {
        const long kl = static_cast<long>(k);
        const Poly xk = pres.nf_pow(x, k);
        const Poly yk = pres.nf_pow(y, k);
        const Poly zk = pres.nf_pow(z, k);
        const Poly xzk = pres.nf_pow(xz, k);
        const Poly yzk = pres.nf_pow(yz, k);
        const std::string ks = "k=" + std::to_string(k);
        check_identity(report, ks + " [x^k,y]=k*x^(k-1)", nf_commutator(xk, y, pres),
                       scaled_predecessor_power(kl, x, k, pres));
        check_identity(report, ks + " [x,y^k]=k*y^(k-1)", nf_commutator(x, yk, pres),
                       scaled_predecessor_power(kl, y, k, pres));
        check_identity(report, ks + " [y,z^k]=k*z^(k-1)", nf_commutator(y, zk, pres),
                       scaled_predecessor_power(kl, z, k, pres));
        check_identity(report, ks + " [y^k,z]=k*y^(k-1)", nf_commutator(yk, z, pres),
                       scaled_predecessor_power(kl, y, k, pres));
        // -k*(y*(x+z)^k + (x+z)^(k-1)), two ways
        Poly rhs5 = Rational(-kl) * pres.nf_mul(y, xzk);
        rhs5 += Rational(-1) * scaled_predecessor_power(kl, xz, k, pres);
        check_identity(report, ks + " [x,(x+z)^k]=-k*(y*(x+z)^k+(x+z)^(k-1))",
                       nf_commutator(x, xzk, pres), rhs5);
        check_identity(report, ks + " [(x+z)^k,z]=-k*(y*(x+z)^k+(x+z)^(k-1))",
                       nf_commutator(xzk, z, pres), rhs5);
        check_identity(report, ks + " [(y+z)^k,z]=k*(y+z)^(k-1)", nf_commutator(yzk, z, pres),
                       scaled_predecessor_power(kl, yz, k, pres));
        check_identity(report, ks + " [y,(x+z)^k]=0", nf_commutator(y, xzk, pres),
                       Poly::zero(pres.gens()));
    }
    return report;
}

std::vector<Poly> ry_orbit(const Poly& w0, const Presentation& pres) {
    std::vector<Poly> orbit;
    Poly cur = pres.nf(w0);
    orbit.push_back(cur);
    const std::size_t cap = xz_degree(cur, pres) + 2;
    while (!orbit.back().is_zero()) {
        if (orbit.size() > cap)
            throw TheoryViolation("[.,y] iteration did not reach zero within the x,z-degree bound",
                                  orbit.back().to_string());
        orbit.push_back(apply_op(OperatorTag::ry(), orbit.back(), pres));
    }
    return orbit;
}

bool ry_endpoint_matches(const std::vector<std::vector<Rational>>& alpha, unsigned big_n,
                         unsigned big_m, const Presentation& pres) {
    // w0 = sum_{p<=M} sum_{k<=N} alpha[p][k] x^{N-k} y^p z^k
    Poly w = Poly::zero(pres.gens());
    for (unsigned p = 0; p <= big_m; ++p) {
        for (unsigned k = 0; k <= big_n; ++k) {
            const Rational& c = alpha.at(p).at(k);
            Word mono = Word::power(pres.x_role(), big_n - k)
                            .concat(Word::power(pres.y_role(), p))
                            .concat(Word::power(pres.z_role(), k));
            w.add_term(mono, c);
        }
    }
    for (unsigned step = 0; step < big_n; ++step) w = apply_op(OperatorTag::ry(), w, pres);
    Poly expected = Poly::zero(pres.gens());
    const Rational nfact{factorial(big_n)};
    for (unsigned p = 0; p <= big_m; ++p) {
        Rational alt(0);
        for (unsigned k = 0; k <= big_n; ++k)
            alt += (k % 2 == 0 ? alpha[p][k] : -alpha[p][k]);
        expected.add_term(Word::power(pres.y_role(), p), nfact * alt);
    }
    return w == expected;
}

ZkxParts zkx_decompose(unsigned k, const Presentation& pres) {
    if (k == 0) throw UsageError("z^k x decomposition needs k >= 1");
    const Poly x = pres.gen_poly(pres.x_role());
    const Poly z = pres.gen_poly(pres.z_role());
    const Poly yz = pres.nf(pres.gen_poly(pres.y_role()) + z);
    ZkxParts parts{pres.nf_mul(x, pres.nf_pow(yz, k)), Poly::zero(pres.gens())};
    parts.tail = pres.nf_mul(pres.nf_pow(z, k), x) - parts.head;
    if (parts.tail.degree_in(pres.x_role()) != 0)
        throw TheoryViolation("z^k x tail contains the x generator", parts.tail.to_string());
    return parts;
}

bool yz_power_coeffs_positive(unsigned k, const Presentation& pres) {
    const Poly yz = pres.nf(pres.gen_poly(pres.y_role()) + pres.gen_poly(pres.z_role()));
    const Poly yzk = pres.nf_pow(yz, k);
    for (unsigned i = 0; i <= k; ++i) {
        Word mono = Word::power(pres.y_role(), i).concat(Word::power(pres.z_role(), k - i));
        if (yzk.coeff(mono).sign() <= 0) return false;
    }
    return true;
}

namespace {

// normal form of x^a y^p (x+z)^s z^k
Poly mixed_monomial(const Presentation& pres, unsigned a, unsigned p, unsigned s, unsigned k) {
    Poly left = Poly::monomial(pres.gens(),
                               Word::power(pres.x_role(), a).concat(Word::power(pres.y_role(), p)));
    Poly right = Poly::monomial(pres.gens(), Word::power(pres.z_role(), k));
    return pres.nf_mul(pres.nf_mul(left, pres.xz_power(s)), right);
}

}  // namespace

bool xz_raising_step_holds(unsigned big_n, unsigned s, unsigned k, unsigned p,
                           const Presentation& pres) {
    if (big_n == 0 || s > big_n - 1 || k > big_n - s - 1)
        throw UsageError("raising step needs 0 <= s <= N-1 and 0 <= k <= N-s-1");
    const Poly lhs = mixed_monomial(pres, big_n - s - k, p, s, k);
    Poly rhs = mixed_monomial(pres, big_n - s - 1 - k, p, s + 1, k);
    rhs -= mixed_monomial(pres, big_n - s - k - 1, p, s, k + 1);
    if (p > 0)
        rhs += Rational(static_cast<long>(p)) * mixed_monomial(pres, big_n - s - 1 - k, p - 1, s, k);
    if (s > 0) {
        rhs -= Rational(static_cast<long>(s)) * mixed_monomial(pres, big_n - s - 1 - k, p + 1, s, k);
        rhs -= Rational(static_cast<long>(s)) * mixed_monomial(pres, big_n - s - 1 - k, p, s - 1, k);
    }
    return lhs == rhs;
}

bool lx_action_closed_form_holds(unsigned i, unsigned k, unsigned j, const Presentation& pres) {
    const Poly w = pres.xz_monomial_nf(0, i, k);
    const Poly lhs = apply_op(OperatorTag::lx(j), w, pres);
    Poly rhs = Poly::zero(pres.gens());
    if (i > 0) rhs += Rational(static_cast<long>(i)) * pres.xz_monomial_nf(0, i - 1, k);
    if (k > 0) rhs -= Rational(static_cast<long>(k)) * pres.xz_monomial_nf(0, i, k - 1);
    Rational jk = Rational(static_cast<long>(j)) - Rational(static_cast<long>(k));
    rhs += jk * pres.xz_monomial_nf(0, i + 1, k);
    return lhs == rhs;
}

IdentityReport identity_suite(int suite, unsigned max, unsigned max_p, const Presentation& pres) {
    if (suite == 2) return power_identity_suite(pres, max);
    IdentityReport report;
    report.suite = suite;
    switch (suite) {
        case 4: {
            // exhaustive monomial orbits: x^{N-k} y^p z^k ends at N!(-1)^k y^p
            for (unsigned big_n = 0; big_n <= max; ++big_n) {
                for (unsigned k = 0; k <= big_n; ++k) {
                    for (unsigned p = 0; p <= max_p; ++p) {
                        ++report.cases;
                        Word mono = Word::power(pres.x_role(), big_n - k)
                                        .concat(Word::power(pres.y_role(), p))
                                        .concat(Word::power(pres.z_role(), k));
                        auto orbit = ry_orbit(Poly::monomial(pres.gens(), mono), pres);
                        Poly expected = Poly::zero(pres.gens());
                        Rational c{factorial(big_n)};
                        if (k % 2 == 1) c = -c;
                        expected.add_term(Word::power(pres.y_role(), p), c);
                        bool ok = orbit.size() == big_n + 2 && orbit[big_n] == expected &&
                                  orbit[big_n + 1].is_zero();
                        if (!ok)
                            report.failures.push_back({"N=" + std::to_string(big_n) +
                                                           " k=" + std::to_string(k) +
                                                           " p=" + std::to_string(p),
                                                       "orbit endpoint mismatch"});
                    }
                }
            }
            break;
        }
        case 5: {
            for (unsigned k = 1; k <= max; ++k) {
                ++report.cases;
                try {
                    zkx_decompose(k, pres);
                } catch (const TheoryViolation& tv) {
                    report.failures.push_back({"k=" + std::to_string(k), tv.what()});
                }
                ++report.cases;
                if (!yz_power_coeffs_positive(k, pres))
                    report.failures.push_back(
                        {"k=" + std::to_string(k), "(y+z)^k has a non-positive top coefficient"});
            }
            break;
        }
        case 6: {
            for (unsigned big_n = 1; big_n <= max; ++big_n) {
                for (unsigned s = 0; s <= big_n - 1; ++s) {
                    for (unsigned k = 0; k + s + 1 <= big_n; ++k) {
                        for (unsigned p = 0; p <= max_p; ++p) {
                            ++report.cases;
                            if (!xz_raising_step_holds(big_n, s, k, p, pres))
                                report.failures.push_back(
                                    {"N=" + std::to_string(big_n) + " s=" + std::to_string(s) +
                                         " k=" + std::to_string(k) + " p=" + std::to_string(p),
                                     "raising step identity failed"});
                        }
                    }
                }
            }
            break;
        }
        case 7: {
            for (unsigned i = 0; i <= max; ++i)
                for (unsigned k = 0; k <= max; ++k)
                    for (unsigned j = 0; j <= max; ++j) {
                        ++report.cases;
                        if (!lx_action_closed_form_holds(i, k, j, pres))
                            report.failures.push_back(
                                {"i=" + std::to_string(i) + " k=" + std::to_string(k) +
                                     " j=" + std::to_string(j),
                                 "closed form mismatch"});
                    }
            break;
        }
        default:
            throw UsageError("unknown identity suite " + std::to_string(suite) +
                             " (available: 2, 4, 5, 6, 7)");
    }
    return report;
}

}  // namespace gkwb
