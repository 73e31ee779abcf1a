#include "gkwb/rewrite.hpp"

#include <cassert>
#include <sstream>

#include "gkwb/errors.hpp"
#include "gkwb/parser.hpp"

namespace gkwb {

RuleSystem::RuleSystem(GensPtr gens, std::vector<RewriteRule> rules)
    : gens_(std::move(gens)), rules_(std::move(rules)) {
    if (!gens_) throw UsageError("rule system without a generator set");
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (r.lhs.empty()) throw UsageError("rule with empty left-hand side");
        for (Letter l : r.lhs.letters)
            if (l >= gens_->size()) throw UsageError("rule lhs letter out of range");
        r.rhs.check_same_gens(Poly::zero(gens_));
        for (const auto& [w, c] : r.rhs.terms())
            if (deg_lex_cmp(w, r.lhs) >= 0)
                throw UsageError("rule is not terminating: rhs word '" +
                                 word_to_string(w, *gens_) + "' is not smaller than lhs '" +
                                 word_to_string(r.lhs, *gens_) + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (rules_[j].lhs == r.lhs)
                throw UsageError("duplicate rule left-hand side: " + word_to_string(r.lhs, *gens_));
    }
}

std::optional<RuleSystem::Redex> RuleSystem::find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.degree(); ++pos) {
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            if (w.matches_at(rules_[r].lhs, pos)) return Redex{pos, r};
        }
    }
    return std::nullopt;
}

namespace {

// replace the occurrence of rules[redex.rule].lhs at redex.pos inside `w`
// (whose coefficient is `coeff`) and accumulate the result into `acc`
void apply_rule_at(Poly& acc, const Word& w, const Rational& coeff,
                   const RuleSystem::Redex& redex, const RuleSystem& rs) {
    const RewriteRule& rule = rs.rules()[redex.rule];
    const Word prefix = w.sub(0, redex.pos);
    const std::size_t tail_start = redex.pos + rule.lhs.degree();
    const Word suffix = w.sub(tail_start, w.degree() - tail_start);
    for (const auto& [tw, tc] : rule.rhs.terms()) {
        Word nw = prefix.concat(tw).concat(suffix);
        // termination invariant: every produced word is strictly smaller
        assert(deg_lex_cmp(nw, w) < 0);
        acc.add_term(nw, coeff * tc);
    }
}

}  // namespace

ReduceStep reduce_once(const Poly& p, const RuleSystem& rs) {
    p.check_same_gens(Poly::zero(rs.gens()));
    for (const auto& [w, c] : p.terms()) {
        auto redex = rs.find_redex(w);
        if (!redex) continue;
        Poly out = p;
        out.mutable_terms().erase(w);
        apply_rule_at(out, w, c, *redex, rs);
        return {std::move(out), true};
    }
    return {p, false};
}

Poly normal_form(const Poly& p, const RuleSystem& rs) {
    p.check_same_gens(Poly::zero(rs.gens()));
    Poly acc = p;
    auto& terms = acc.mutable_terms();
    unsigned long steps = 0;
    auto it = terms.begin();
    // Walk words in descending deg-lex order. Rewriting the current word only
    // injects strictly smaller words, so everything above the cursor stays
    // irreducible once scanned.
    while (it != terms.end()) {
        auto redex = rs.find_redex(it->first);
        if (!redex) {
            ++it;
            continue;
        }
        if (++steps > rs.step_budget())
            throw BudgetError("normal form step budget exceeded (" +
                              std::to_string(rs.step_budget()) + " steps)");
        Word w = it->first;
        Rational c = it->second;
        terms.erase(it);
        apply_rule_at(acc, w, c, *redex, rs);
        it = terms.upper_bound(w);  // first word strictly smaller than w
    }
    return acc;
}

std::vector<CriticalPair> critical_pairs(const RuleSystem& rs) {
    std::vector<CriticalPair> out;
    const auto& rules = rs.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& la = rules[i].lhs;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& lb = rules[j].lhs;
            // proper overlaps: a nonempty proper suffix of lhs_a equals a
            // proper prefix of lhs_b
            const std::size_t tmax = std::min(la.degree(), lb.degree());
            for (std::size_t t = 1; t < tmax; ++t) {
                if (!la.sub(la.degree() - t, t).matches_at(lb.sub(0, t), 0)) continue;
                CriticalPair cp;
                cp.kind = CriticalPair::Kind::overlap;
                cp.rule_a = i;
                cp.rule_b = j;
                cp.pos_a = 0;
                cp.pos_b = la.degree() - t;
                cp.overlap_word = la.concat(lb.sub(t, lb.degree() - t));
                cp.left_context = la.sub(0, la.degree() - t);
                cp.right_context = cp.overlap_word.sub(la.degree(), cp.overlap_word.degree() - la.degree());
                out.push_back(std::move(cp));
            }
            // inclusions: lhs_b strictly inside lhs_a
            if (i != j && lb.degree() < la.degree()) {
                for (std::size_t q = 0; q + lb.degree() <= la.degree(); ++q) {
                    if (!la.matches_at(lb, q)) continue;
                    CriticalPair cp;
                    cp.kind = CriticalPair::Kind::inclusion;
                    cp.rule_a = i;
                    cp.rule_b = j;
                    cp.pos_a = 0;
                    cp.pos_b = q;
                    cp.overlap_word = la;
                    cp.left_context = la.sub(0, q);
                    cp.right_context = la.sub(q + lb.degree(), la.degree() - q - lb.degree());
                    out.push_back(std::move(cp));
                }
            }
        }
    }
    return out;
}

Poly s_polynomial(const CriticalPair& pair, const RuleSystem& rs) {
    Poly rw_a = Poly::zero(rs.gens());
    Poly rw_b = Poly::zero(rs.gens());
    apply_rule_at(rw_a, pair.overlap_word, Rational(1), {pair.pos_a, pair.rule_a}, rs);
    apply_rule_at(rw_b, pair.overlap_word, Rational(1), {pair.pos_b, pair.rule_b}, rs);
    return rw_a - rw_b;
}

ConfluenceReport confluence_check(const RuleSystem& rs) {
    ConfluenceReport report;
    for (auto& cp : critical_pairs(rs)) {
        ConfluenceReport::PairResult pr{cp, s_polynomial(cp, rs), Poly::zero(rs.gens())};
        pr.residual = normal_form(pr.s_poly, rs);
        if (!pr.residual.is_zero()) report.all_reduce_to_zero = false;
        report.pairs.push_back(std::move(pr));
    }
    return report;
}

std::string rules_to_text(const RuleSystem& rs) {
    std::ostringstream out;
    out << "gens:";
    for (std::size_t i = 0; i < rs.gens()->size(); ++i)
        out << ' ' << rs.gens()->name(static_cast<Letter>(i));
    out << '\n';
    for (const auto& r : rs.rules())
        out << word_to_string(r.lhs, *rs.gens()) << " -> " << r.rhs.to_string() << '\n';
    return out.str();
}

RuleSystem rules_from_text(std::string_view text) {
    GensPtr gens;
    std::vector<RewriteRule> rules;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.rfind("gens:", 0) == 0) {
            if (gens) throw UsageError("duplicate gens: line in rule file");
            std::istringstream gin(line.substr(5));
            std::vector<std::string> names;
            std::string n;
            while (gin >> n) names.push_back(n);
            gens = make_gens(std::move(names));
            continue;
        }
        if (!gens) throw UsageError("rule file must start with a 'gens:' line");
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw UsageError("rule line " + std::to_string(lineno) + " has no '->'");
        Word lhs = parse_word(line.substr(0, arrow), gens);
        Poly rhs = parse_expr(line.substr(arrow + 2), gens);
        rules.push_back({std::move(lhs), std::move(rhs)});
    }
    if (!gens) throw UsageError("rule file has no 'gens:' line");
    return RuleSystem(std::move(gens), std::move(rules));
}

}  // namespace gkwb
