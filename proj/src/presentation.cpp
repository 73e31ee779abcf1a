#include "gkwb/presentation.hpp"

#include <cassert>
#include <charconv>
#include <mutex>

#include "gkwb/errors.hpp"

namespace gkwb {

void XZBasisElem::add(const XZKey& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

unsigned XZBasisElem::max_s() const {
    unsigned m = 0;
    for (const auto& [k, c] : coeffs) m = std::max(m, k.s);
    return m;
}

unsigned XZBasisElem::max_p_at_s(unsigned s) const {
    unsigned m = 0;
    for (const auto& [k, c] : coeffs)
        if (k.s == s) m = std::max(m, k.p);
    return m;
}

namespace {

// rhs helper: c1*w1 + c2*w2 + ...
Poly poly_of(const GensPtr& gens, std::initializer_list<std::pair<Word, long>> terms) {
    Poly p = Poly::zero(gens);
    for (const auto& [w, c] : terms) p.add_term(w, Rational(c));
    return p;
}

Word w2(Letter a, Letter b) {
    return Word{{a, b}};
}

}  // namespace

Presentation::Presentation(Family family, unsigned n, RuleSystem rules, Letter x_role,
                           Letter y_role, Letter z_role)
    : family_(family), n_(n), rules_(std::move(rules)), x_role_(x_role), y_role_(y_role),
      z_role_(z_role), caches_(std::make_shared<Caches>()) {
    ConfluenceReport report = confluence_check(rules_);
    if (!report.all_reduce_to_zero) {
        std::string what = "presentation is not confluent;";
        for (const auto& pr : report.pairs)
            if (!pr.residual.is_zero())
                what += " residual " + pr.residual.to_string() + " on overlap " +
                        word_to_string(pr.pair.overlap_word, *gens());
        throw TheoryViolation(what);
    }
    const std::size_t g = gens()->size();
    unsigned cap = g <= 3 ? 4 : (g <= 7 ? 3 : 2);
    verify_normal_words(cap);
}

void Presentation::verify_normal_words(unsigned max_deg) const {
    for (unsigned d = 0; d <= max_deg; ++d) {
        for (const Word& w : all_words_of_degree(*gens(), d)) {
            bool irreducible = rules_.is_irreducible(w);
            if (irreducible != w.is_sorted())
                throw TheoryViolation("normal words are not the sorted monomials: " +
                                      word_to_string(w, *gens()));
        }
    }
}

Presentation Presentation::make_A() {
    GensPtr gens = make_gens({"x", "y", "z"});
    const Letter x = 0, y = 1, z = 2;
    std::vector<RewriteRule> rules;
    // y*x -> x*y - 1
    rules.push_back({w2(y, x), poly_of(gens, {{w2(x, y), 1}, {Word::unit(), -1}})});
    // z*y -> y*z - 1
    rules.push_back({w2(z, y), poly_of(gens, {{w2(y, z), 1}, {Word::unit(), -1}})});
    // z*x -> x*z + x*y + y*z
    rules.push_back({w2(z, x), poly_of(gens, {{w2(x, z), 1}, {w2(x, y), 1}, {w2(y, z), 1}})});
    return Presentation(Family::A, 1, RuleSystem(gens, std::move(rules)), x, y, z);
}

Presentation Presentation::make_An(unsigned n) {
    if (n < 1) throw UsageError("An family needs n >= 1");
    if (n > 60) throw UsageError("An family capped at n = 60");
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("y");
    for (unsigned i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    GensPtr gens = make_gens(std::move(names));

    const Letter x1 = 0;
    const Letter y = static_cast<Letter>(n);
    const Letter z1 = static_cast<Letter>(n + 1);
    auto zi = [&](unsigned i) { return static_cast<Letter>(n + i); };  // i in 1..n

    std::vector<RewriteRule> rules;
    const std::size_t g = 2 * static_cast<std::size_t>(n) + 1;
    for (Letter a = 1; a < g; ++a) {
        for (Letter b = 0; b < a; ++b) {
            Poly rhs = Poly::monomial(gens, w2(b, a));
            if (a == y && b == x1) {
                rhs.add_term(Word::unit(), Rational(-1));  // [x1, y] = 1
            } else if (a == z1 && b == y) {
                rhs.add_term(Word::unit(), Rational(-1));  // [y, z1] = 1
            } else if (a == z1 && b == x1) {
                // [x1, z1] = -x1*y - y*z1
                rhs.add_term(w2(x1, y), Rational(1));
                rhs.add_term(w2(y, z1), Rational(1));
            } else if (a >= n + 1 && b < n && a == zi(b + 1)) {
                rhs.add_term(Word::unit(), Rational(-1));  // [xi, zi] = 1, i >= 2
            }
            rules.push_back({w2(a, b), std::move(rhs)});
        }
    }
    return Presentation(Family::An, n, RuleSystem(gens, std::move(rules)), x1, y, z1);
}

Presentation Presentation::from_selector(std::string_view selector) {
    if (selector == "A") return make_A();
    if (selector.rfind("An:", 0) == 0) {
        unsigned n = 0;
        auto rest = selector.substr(3);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
        if (ec != std::errc{} || ptr != rest.data() + rest.size())
            throw UsageError("bad algebra selector: " + std::string(selector));
        return make_An(n);
    }
    throw UsageError("unknown algebra selector '" + std::string(selector) +
                     "' (expected A or An:<n>)");
}

std::string Presentation::selector() const {
    return family_ == Family::A ? "A" : "An:" + std::to_string(n_);
}

Letter Presentation::aux_x(unsigned i) const {
    if (family_ != Family::An || i < 2 || i > n_)
        throw UsageError("auxiliary generator x_" + std::to_string(i) + " not present");
    return static_cast<Letter>(i - 1);
}

Letter Presentation::aux_z(unsigned i) const {
    if (family_ != Family::An || i < 2 || i > n_)
        throw UsageError("auxiliary generator z_" + std::to_string(i) + " not present");
    return static_cast<Letter>(n_ + i);
}

bool Presentation::is_aux(Letter l) const {
    return l != x_role_ && l != y_role_ && l != z_role_;
}

Poly Presentation::nf_word(const Word& w) const {
    auto redex = rules_.find_redex(w);
    if (!redex) return Poly::monomial(gens(), w);
    const bool cacheable = w.degree() <= cache_len_cap_;
    if (cacheable) {
        std::shared_lock lk(caches_->nf_mutex);
        auto it = caches_->nf_cache.find(w);
        if (it != caches_->nf_cache.end()) return it->second;
    }
    const RewriteRule& rule = rules_.rules()[redex->rule];
    const Word prefix = w.sub(0, redex->pos);
    const std::size_t tail = redex->pos + rule.lhs.degree();
    const Word suffix = w.sub(tail, w.degree() - tail);
    Poly out = Poly::zero(gens());
    for (const auto& [tw, tc] : rule.rhs.terms())
        out.add_scaled(nf_word(prefix.concat(tw).concat(suffix)), tc);
    if (cacheable) {
        std::unique_lock lk(caches_->nf_mutex);
        if (caches_->nf_cached_terms + out.term_count() <= cache_term_budget_) {
            auto [it, inserted] = caches_->nf_cache.emplace(w, out);
            if (inserted) caches_->nf_cached_terms += out.term_count();
        }
    }
    return out;
}

Poly Presentation::nf(const Poly& p) const {
    p.check_same_gens(Poly::zero(gens()));
    bool already = true;
    for (const auto& [w, c] : p.terms()) {
        if (!rules_.is_irreducible(w)) {
            already = false;
            break;
        }
    }
    if (already) return p;
    Poly out = Poly::zero(gens());
    for (const auto& [w, c] : p.terms()) out.add_scaled(nf_word(w), c);
    return out;
}

Poly Presentation::nf_mul(const Poly& a, const Poly& b) const {
    a.check_same_gens(Poly::zero(gens()));
    b.check_same_gens(a);
    Poly out = Poly::zero(gens());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) out.add_scaled(nf_word(u.concat(v)), cu * cv);
    return out;
}

Poly Presentation::nf_pow(const Poly& a, unsigned e) const {
    Poly out = one();
    for (unsigned i = 0; i < e; ++i) out = nf_mul(out, a);
    return out;
}

Poly Presentation::xz_sum() const {
    Poly p = gen_poly(x_role_);
    p += gen_poly(z_role_);
    return p;
}

Poly Presentation::xz_power(unsigned s) const {
    {
        std::shared_lock lk(caches_->pow_mutex);
        if (s < caches_->xz_powers.size()) return caches_->xz_powers[s];
    }
    std::unique_lock lk(caches_->pow_mutex);
    auto& powers = caches_->xz_powers;
    if (powers.empty()) powers.push_back(one());
    while (powers.size() <= s) powers.push_back(nf_mul(powers.back(), xz_sum()));
    return powers[s];
}

Poly Presentation::xz_monomial_nf(unsigned a, unsigned p, unsigned s) const {
    Word head = Word::power(x_role_, a).concat(Word::power(y_role_, p));
    return nf_mul(Poly::monomial(gens(), head), xz_power(s));
}

const Presentation::DegreeBasis& Presentation::degree_basis(unsigned degree,
                                                            bool kernel_only) const {
    const auto key = std::make_pair(degree, kernel_only);
    {
        std::shared_lock lk(caches_->basis_mutex);
        auto it = caches_->basis_cache.find(key);
        if (it != caches_->basis_cache.end()) return *it->second;
    }
    auto basis = std::make_shared<DegreeBasis>();
    for (unsigned a = 0; a <= (kernel_only ? 0u : degree); ++a) {
        for (unsigned p = 0; a + p <= degree; ++p) {
            unsigned s = degree - a - p;
            Poly full = xz_monomial_nf(a, p, s);
            basis->keys.push_back(XZKey{a, p, s});
            basis->top_span.insert(full.component(degree));
            basis->full.push_back(std::move(full));
        }
    }
    if (basis->top_span.rank() != basis->keys.size())
        throw TheoryViolation("x^a y^p (x+z)^s family is rank-deficient at degree " +
                              std::to_string(degree));
    std::unique_lock lk(caches_->basis_mutex);
    auto [it, inserted] = caches_->basis_cache.emplace(key, std::move(basis));
    return *it->second;
}

Presentation::XZResult Presentation::to_xz_basis(const Poly& p, bool kernel_only) const {
    p.check_same_gens(Poly::zero(gens()));
    for (const auto& [w, c] : p.terms())
        for (Letter l : w.letters)
            if (is_aux(l))
                throw UsageError("element involves auxiliary generator " +
                                 gens()->name(l) + "; basis change needs the x,y,z part only");
    XZResult result{false, XZBasisElem{}, Poly::zero(gens())};
    Poly r = nf(p);
    while (!r.is_zero()) {
        const unsigned d = static_cast<unsigned>(*r.degree());
        const DegreeBasis& basis = degree_basis(d, kernel_only);
        auto red = basis.top_span.reduce(r.component(d));
        if (!red.residual.is_zero()) {
            result.ok = false;
            result.residual = std::move(r);
            return result;
        }
        for (const auto& [idx, c] : red.combination) {
            r.add_scaled(basis.full[idx], -c);
            result.elem.add(basis.keys[idx], c);
        }
        assert(r.is_zero() || *r.degree() < d);
    }
    result.ok = true;
    result.residual = Poly::zero(gens());
    return result;
}

Poly Presentation::from_xz_basis(const XZBasisElem& e) const {
    Poly out = Poly::zero(gens());
    for (const auto& [k, c] : e.coeffs) out.add_scaled(xz_monomial_nf(k.a, k.p, k.s), c);
    return out;
}

}  // namespace gkwb
