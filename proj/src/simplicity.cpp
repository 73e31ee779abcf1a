#include "gkwb/simplicity.hpp"

#include <algorithm>

#include "gkwb/errors.hpp"
#include "gkwb/parser.hpp"

namespace gkwb {

namespace {

using KernelCoords = std::map<std::pair<unsigned, unsigned>, Rational>;  // (p, s) -> coeff

void coords_add(KernelCoords& into, unsigned p, unsigned s, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = into.emplace(std::make_pair(p, s), v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) into.erase(it);
    }
}

// closed-form action of w -> [x,w] + j*y*w on the kernel family y^p (x+z)^s
KernelCoords lx_on_coords(const KernelCoords& c, unsigned j) {
    KernelCoords out;
    for (const auto& [ps, v] : c) {
        const auto [p, s] = ps;
        if (p > 0) coords_add(out, p - 1, s, Rational(static_cast<long>(p)) * v);
        if (s > 0) coords_add(out, p, s - 1, Rational(-static_cast<long>(s)) * v);
        Rational js = Rational(static_cast<long>(j)) - Rational(static_cast<long>(s));
        coords_add(out, p + 1, s, js * v);
    }
    return out;
}

std::string coords_to_string(const KernelCoords& c) {
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [ps, v] : c) {
        const auto [p, s] = ps;
        if (!out.empty()) out += " + ";
        out += v.to_string();
        if (p > 0) out += "*y^" + std::to_string(p);
        if (s > 0) out += "*(x+z)^" + std::to_string(s);
    }
    return out;
}

std::pair<unsigned, unsigned> coords_bidegree(const KernelCoords& c) {
    unsigned maxp = 0, maxs = 0;
    for (const auto& [ps, v] : c) {
        maxp = std::max(maxp, ps.first);
        maxs = std::max(maxs, ps.second);
    }
    return {maxp, maxs};
}

void record_poly_step(ReduceOutcome& out, const OperatorTag& tag, const Poly& value) {
    TraceStep ts;
    ts.tag = tag;
    ts.term_count = value.term_count();
    ts.intermediate = value.term_count() <= out.trace.elide_above
                          ? value.to_string()
                          : "(elided: " + std::to_string(value.term_count()) + " terms)";
    out.cert.steps.push_back(tag);
    out.trace.steps.push_back(std::move(ts));
}

void record_coords_step(ReduceOutcome& out, const OperatorTag& tag, const KernelCoords& value) {
    TraceStep ts;
    ts.tag = tag;
    ts.term_count = value.size();
    ts.intermediate = coords_to_string(value);
    ts.kernel_bidegree = coords_bidegree(value);
    out.cert.steps.push_back(tag);
    out.trace.steps.push_back(std::move(ts));
}

}  // namespace

ReduceOutcome reduce_to_scalar(const Poly& w, const Presentation& pres) {
    Poly cur = pres.nf(w);
    if (cur.is_zero()) throw UsageError("cannot reduce the zero element to a scalar");

    ReduceOutcome out{false, Certificate{pres.selector(), cur, {}, Rational(0)},
                      ReductionTrace{}, std::nullopt, {}};

    // Phase 0: strip auxiliary pairs, outermost first.
    if (pres.family() == Family::An) {
        for (unsigned i = pres.n(); i >= 2; --i) {
            const std::size_t dz = cur.degree_in(pres.aux_z(i));
            for (std::size_t t = 0; t < dz; ++t) {
                cur = apply_op(OperatorTag::ad_x(i), cur, pres);
                if (cur.is_zero())
                    throw TheoryViolation("auxiliary stripping hit zero (AdX:" +
                                          std::to_string(i) + ")");
                record_poly_step(out, OperatorTag::ad_x(i), cur);
            }
            const std::size_t dx = cur.degree_in(pres.aux_x(i));
            for (std::size_t t = 0; t < dx; ++t) {
                cur = apply_op(OperatorTag::rad_z(i), cur, pres);
                if (cur.is_zero())
                    throw TheoryViolation("auxiliary stripping hit zero (RadZ:" +
                                          std::to_string(i) + ")");
                record_poly_step(out, OperatorTag::rad_z(i), cur);
            }
        }
    }

    // Phase B: iterate [.,y] and keep the last nonzero value. The operator
    // lowers the x,z-degree, which bounds the iteration count.
    const std::size_t ry_cap = xz_degree(cur, pres) + 2;
    std::size_t ry_applied = 0;
    while (true) {
        Poly next = apply_op(OperatorTag::ry(), cur, pres);
        if (next.is_zero()) break;
        if (++ry_applied > ry_cap)
            throw TheoryViolation("[.,y] iteration exceeded the x,z-degree bound",
                                  next.to_string());
        cur = std::move(next);
        record_poly_step(out, OperatorTag::ry(), cur);
    }

    // Kernel landing: the surviving value should be a combination of the
    // y^p (x+z)^s family. This is a runtime-checked hypothesis, not an axiom.
    auto landing = pres.to_xz_basis(cur, /*kernel_only=*/true);
    if (!landing.ok) {
        out.ok = false;
        out.kernel_residual = landing.residual;
        out.message = "last nonzero [.,y]-iterate is not a combination of y^p (x+z)^s; residual " +
                      landing.residual.to_string();
        return out;
    }

    KernelCoords coords;
    for (const auto& [key, c] : landing.elem.coeffs) coords_add(coords, key.p, key.s, c);
    if (coords.empty()) throw InternalError("kernel landing produced zero coordinates");

    // Phase C: clear the top (x+z) layer with Lx(N) applied M+1 times, then
    // finish with Lx(0) on the pure-y remainder.
    while (true) {
        const auto [maxp_all, big_n] = coords_bidegree(coords);
        (void)maxp_all;
        if (big_n == 0) break;
        unsigned big_m = 0;
        for (const auto& [ps, v] : coords)
            if (ps.second == big_n) big_m = std::max(big_m, ps.first);
        for (unsigned t = 0; t <= big_m; ++t) {
            coords = lx_on_coords(coords, big_n);
            if (coords.empty())
                throw TheoryViolation("weighted bracket unexpectedly vanished (Lx:" +
                                      std::to_string(big_n) + ")");
            record_coords_step(out, OperatorTag::lx(big_n), coords);
        }
        if (coords_bidegree(coords).second >= big_n)
            throw InternalError("top (x+z) layer survived its clearing phase");
    }
    unsigned deg_y = coords_bidegree(coords).first;
    for (unsigned t = 0; t < deg_y; ++t) {
        coords = lx_on_coords(coords, 0);
        if (coords.empty())
            throw TheoryViolation("weighted bracket unexpectedly vanished (Lx:0)");
        record_coords_step(out, OperatorTag::lx(0), coords);
    }

    if (coords.size() != 1 || coords.begin()->first != std::make_pair(0u, 0u))
        throw InternalError("reduction did not end on a scalar: " + coords_to_string(coords));
    out.cert.final_scalar = coords.begin()->second;
    if (out.cert.final_scalar.is_zero()) throw InternalError("final scalar is zero");
    out.ok = true;
    return out;
}

bool verify_certificate(const Certificate& cert, const Presentation& pres,
                        std::string* mismatch) {
    auto fail = [&](const std::string& why) {
        if (mismatch) *mismatch = why;
        return false;
    };
    if (cert.algebra != pres.selector())
        return fail("certificate algebra '" + cert.algebra + "' does not match '" +
                    pres.selector() + "'");
    if (cert.final_scalar.is_zero()) return fail("final scalar is zero");
    Poly cur = pres.nf(cert.input);
    for (const auto& tag : cert.steps) cur = apply_op(tag, cur, pres);
    Poly expected = pres.constant(cert.final_scalar);
    if (cur != expected)
        return fail("replay ended on " + cur.to_string() + ", certificate claims " +
                    expected.to_string());
    return true;
}

OracleOutcome ideal_membership_oracle(const Poly& w, const Presentation& pres,
                                      unsigned deg_bound, std::size_t pair_budget) {
    Poly wn = pres.nf(w);
    if (wn.is_zero()) throw UsageError("ideal membership oracle needs a nonzero element");

    std::vector<std::vector<Word>> by_degree;
    std::size_t mono_count = 0;
    for (unsigned d = 0; d <= deg_bound; ++d) {
        by_degree.push_back(sorted_words_of_degree(*pres.gens(), d));
        mono_count += by_degree.back().size();
    }
    if (mono_count * mono_count > pair_budget)
        throw BudgetError("oracle budget exceeded: " + std::to_string(mono_count * mono_count) +
                          " context pairs > " + std::to_string(pair_budget));

    // right products w*b, indexed like the flattened monomial list
    std::vector<std::vector<Poly>> right;
    for (const auto& degree_list : by_degree) {
        std::vector<Poly> row;
        row.reserve(degree_list.size());
        for (const Word& b : degree_list)
            row.push_back(pres.nf_mul(wn, Poly::monomial(pres.gens(), b)));
        right.push_back(std::move(row));
    }

    PolySpan span(true);
    std::vector<std::pair<Word, Word>> contexts;  // insertion index -> (a, b)
    OracleOutcome outcome;
    bool found = false;

    // low-degree contexts first; scalars tend to appear early
    for (unsigned total = 0; total <= 2 * deg_bound && !found; ++total) {
        const unsigned da_lo = total > deg_bound ? total - deg_bound : 0;
        for (unsigned da = da_lo; da <= std::min(total, deg_bound) && !found; ++da) {
            const unsigned db = total - da;
            for (const Word& a : by_degree[da]) {
                Poly a_poly = Poly::monomial(pres.gens(), a);
                for (std::size_t bi = 0; bi < by_degree[db].size(); ++bi) {
                    span.insert(pres.nf_mul(a_poly, right[db][bi]));
                    contexts.emplace_back(a, by_degree[db][bi]);
                    if (span.has_pivot(Word::unit())) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
    }

    outcome.contains_one = found;
    outcome.rows_inserted = span.inserted();
    outcome.rank = span.rank();
    if (found) {
        auto red = span.reduce(pres.one());
        if (!red.residual.is_zero())
            throw InternalError("unit pivot present but unit reduction left a residual");
        for (const auto& [idx, c] : red.combination)
            outcome.witness.emplace_back(contexts[idx].first, contexts[idx].second, c);
    }
    return outcome;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& tag : cert.steps) steps.push_back(tag.token());
    return nlohmann::json{{"algebra", cert.algebra},
                          {"input", cert.input.to_string()},
                          {"steps", std::move(steps)},
                          {"final_scalar", cert.final_scalar.to_string()}};
}

Certificate certificate_from_json(const nlohmann::json& j, const Presentation& pres) {
    for (const char* key : {"algebra", "input", "steps", "final_scalar"})
        if (!j.contains(key))
            throw UsageError(std::string("certificate JSON is missing '") + key + "'");
    if (!j["algebra"].is_string() || !j["input"].is_string() || !j["steps"].is_array() ||
        !j["final_scalar"].is_string())
        throw UsageError("certificate JSON has wrong field types");
    Certificate cert{j["algebra"].get<std::string>(),
                     pres.nf(parse_expr(j["input"].get<std::string>(), pres.gens())),
                     {},
                     Rational::from_string(j["final_scalar"].get<std::string>())};
    for (const auto& tok : j["steps"]) {
        if (!tok.is_string()) throw UsageError("certificate steps must be strings");
        cert.steps.push_back(OperatorTag::from_token(tok.get<std::string>()));
    }
    return cert;
}

}  // namespace gkwb
