#pragma once

#include <optional>
#include <vector>

#include "gkwb/poly.hpp"

namespace gkwb {

/// Oriented rule lhs -> rhs. Every word of rhs is strictly deg-lex smaller
/// than lhs, which makes the system terminating.
struct RewriteRule {
    Word lhs;
    Poly rhs;
};

class RuleSystem {
public:
    RuleSystem(GensPtr gens, std::vector<RewriteRule> rules);

    const GensPtr& gens() const { return gens_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }

    unsigned long step_budget() const { return step_budget_; }
    void set_step_budget(unsigned long b) { step_budget_ = b; }

    struct Redex {
        std::size_t pos;
        std::size_t rule;
    };
    /// Leftmost position wins; ties broken by rule order.
    std::optional<Redex> find_redex(const Word& w) const;
    bool is_irreducible(const Word& w) const { return !find_redex(w).has_value(); }

private:
    GensPtr gens_;
    std::vector<RewriteRule> rules_;
    unsigned long step_budget_ = 10'000'000;
};

struct CriticalPair {
    enum class Kind { overlap, inclusion };
    std::size_t rule_a = 0;  // applies at pos_a in overlap_word
    std::size_t rule_b = 0;  // applies at pos_b
    Word overlap_word;
    Word left_context;   // prefix of overlap_word before lhs_b
    Word right_context;  // suffix of overlap_word after lhs_a
    std::size_t pos_a = 0;
    std::size_t pos_b = 0;
    Kind kind = Kind::overlap;
};

struct ReduceStep {
    Poly reduced;
    bool changed;
};

/// Rewrites exactly one redex if any exists: the leftmost occurrence of an
/// applicable lhs inside the deg-lex-greatest reducible word.
ReduceStep reduce_once(const Poly& p, const RuleSystem& rs);

/// Fixpoint of reduce_once. Throws BudgetError when the step budget runs out
/// (impossible for a valid rule system; guards corrupted rule sets).
Poly normal_form(const Poly& p, const RuleSystem& rs);

/// All proper suffix/prefix overlaps and lhs-inside-lhs inclusions, in a
/// deterministic order (rule_a, rule_b, position).
std::vector<CriticalPair> critical_pairs(const RuleSystem& rs);

/// Difference of the two one-step rewrites of the overlap word.
Poly s_polynomial(const CriticalPair& pair, const RuleSystem& rs);

struct ConfluenceReport {
    struct PairResult {
        CriticalPair pair;
        Poly s_poly;
        Poly residual;
    };
    std::vector<PairResult> pairs;
    bool all_reduce_to_zero = true;
};

ConfluenceReport confluence_check(const RuleSystem& rs);

/// Text format: '# ...' comments, a 'gens: x y z' header line, then one rule
/// per line as `word -> poly` in the expression grammar.
std::string rules_to_text(const RuleSystem& rs);
RuleSystem rules_from_text(std::string_view text);

}  // namespace gkwb
