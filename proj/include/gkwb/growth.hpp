#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "gkwb/presentation.hpp"

namespace gkwb {

/// Per-degree dimensions of the filtration V_n, with provenance.
struct GrowthRow {
    unsigned long n = 0;
    BigInt dim_counted;
    std::optional<std::size_t> dim_bruteforce;
    enum class Method { counted, counted_and_bruteforce } method = Method::counted;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
    /// dims strictly increasing in n; brute-force values, when present, agree
    /// with the counted ones. Throws TheoryViolation otherwise.
    void validate() const;
};

/// Number of sorted monomials of total degree <= n over g generators,
/// C(n+g, g).
BigInt count_normal_monomials(const Presentation& pres, unsigned long n);

/// Rank over the rationals of span{normal_form(w) : |w| <= n}, built
/// incrementally: the level-n span extends the level-(n-1) span by the
/// products of its new basis rows with each generator.
class FiltrationSpanBuilder {
public:
    explicit FiltrationSpanBuilder(const Presentation& pres);
    std::size_t dim() const { return span_.rank(); }
    unsigned level() const { return level_; }
    /// advance to the next level and return its dimension
    std::size_t advance();

private:
    const Presentation* pres_;
    PolySpan span_;
    std::vector<Poly> frontier_;  // basis rows added at the current level
    unsigned level_ = 0;
};

std::size_t filtration_dim_bruteforce(const Presentation& pres, unsigned n);

/// Default brute-force depth per family: 7 for the three-generator algebra,
/// 4 for A_n with n >= 2. Requests beyond the budget throw BudgetError unless
/// the caller raises it explicitly.
unsigned default_bruteforce_max_n(const Presentation& pres);

GrowthTable growth_table(const Presentation& pres, unsigned long max_n, bool bruteforce,
                         std::optional<unsigned> bruteforce_budget = std::nullopt);

// --- growth-rate estimation -------------------------------------------------

enum class GkMethod { doubling_ratio, loglog_tail };

/// Estimates are asymptotic and finite-n biased, so they are reported as an
/// interval around the value at the largest usable n, never as a bare number.
struct GkReport {
    GkMethod method;
    double estimate = 0.0;
    unsigned long n_used = 0;
    double interval_lo = 0.0;
    double interval_hi = 0.0;
};

/// dims: (n, dim) samples, at least 4 rows. doubling_ratio uses
/// log2(dim(2n)/dim(n)) at the largest n with 2n available; loglog_tail fits
/// the slope of log dim against log n over the upper half of the rows.
GkReport gk_estimate(const std::vector<std::pair<unsigned long, BigInt>>& dims, GkMethod method);

/// Counted dimensions at n = 1, 2, 4, ..., 2^max_log2.
std::vector<std::pair<unsigned long, BigInt>> counting_table_pow2(const Presentation& pres,
                                                                  unsigned max_log2);

// --- closed-form audit -------------------------------------------------------

/// Compares the cubic closed form (n^3 + 6n^2 + 11n)/6 against the true count
/// C(n+3, 3) for the three-generator algebra. The two differ by exactly 1;
/// the audit surfaces that discrepancy rather than hiding it.
struct AuditRow {
    unsigned long n;
    BigInt closed_form;
    BigInt true_count;
    BigInt diff;
};

struct AuditReport {
    std::vector<AuditRow> rows;
    bool diff_always_one = true;
};

AuditReport paper_formula_audit(unsigned long max_n);

/// CSV columns: n, dim_counted, dim_bruteforce, paper_formula, method.
void write_growth_csv(std::ostream& out, const GrowthTable& table, const Presentation& pres);

}  // namespace gkwb
