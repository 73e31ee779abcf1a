#include "gkwb/growth.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gkwb/errors.hpp"

namespace gkwb {

void GrowthTable::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i > 0 && !(rows[i - 1].dim_counted < r.dim_counted))
            throw TheoryViolation("filtration dimensions are not strictly increasing at n = " +
                                  std::to_string(r.n));
        if (r.dim_bruteforce && BigInt(static_cast<unsigned long>(*r.dim_bruteforce)) != r.dim_counted)
            throw TheoryViolation("brute-force dimension disagrees with the count at n = " +
                                  std::to_string(r.n));
    }
}

BigInt count_normal_monomials(const Presentation& pres, unsigned long n) {
    const unsigned long g = pres.gens()->size();
    return binomial(n + g, g);
}

FiltrationSpanBuilder::FiltrationSpanBuilder(const Presentation& pres) : pres_(&pres) {
    Poly unit = pres.one();
    span_.insert(unit);
    frontier_.push_back(std::move(unit));
}

std::size_t FiltrationSpanBuilder::advance() {
    std::vector<Poly> next;
    const std::size_t g = pres_->gens()->size();
    for (const Poly& row : frontier_) {
        for (std::size_t a = 0; a < g; ++a) {
            Poly candidate = pres_->nf_mul(row, pres_->gen_poly(static_cast<Letter>(a)));
            auto red = span_.reduce(candidate);
            if (red.residual.is_zero()) continue;
            Poly pivot = red.residual;
            pivot *= pivot.leading_coeff().inverse();
            span_.insert(pivot);
            next.push_back(std::move(pivot));
        }
    }
    frontier_ = std::move(next);
    ++level_;
    return span_.rank();
}

std::size_t filtration_dim_bruteforce(const Presentation& pres, unsigned n) {
    FiltrationSpanBuilder builder(pres);
    while (builder.level() < n) builder.advance();
    return builder.dim();
}

unsigned default_bruteforce_max_n(const Presentation& pres) {
    return pres.gens()->size() <= 3 ? 7u : 4u;
}

GrowthTable growth_table(const Presentation& pres, unsigned long max_n, bool bruteforce,
                         std::optional<unsigned> bruteforce_budget) {
    const unsigned budget = bruteforce_budget.value_or(default_bruteforce_max_n(pres));
    if (bruteforce && max_n > budget)
        throw BudgetError("brute-force filtration capped at n = " + std::to_string(budget) +
                          " for this algebra (raise the budget explicitly to go further)");
    GrowthTable table;
    std::optional<FiltrationSpanBuilder> builder;
    if (bruteforce) builder.emplace(pres);
    for (unsigned long n = 0; n <= max_n; ++n) {
        GrowthRow row;
        row.n = n;
        row.dim_counted = count_normal_monomials(pres, n);
        if (bruteforce) {
            while (builder->level() < n) builder->advance();
            row.dim_bruteforce = builder->dim();
            row.method = GrowthRow::Method::counted_and_bruteforce;
        }
        table.rows.push_back(std::move(row));
    }
    table.validate();
    return table;
}

namespace {

double log2_bigint(const BigInt& v) {
    if (sgn(v) <= 0) throw UsageError("log of a non-positive dimension");
    long exp = 0;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return static_cast<double>(exp) + std::log2(d);
}

double loglog_slope(const std::vector<std::pair<unsigned long, BigInt>>& rows) {
    // least squares of log dim against log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (const auto& [n, dim] : rows) {
        if (n == 0) continue;
        double lx = std::log(static_cast<double>(n));
        double ly = log2_bigint(dim) * std::log(2.0);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    if (m < 2) throw UsageError("insufficient data for a log-log fit");
    double denom = static_cast<double>(m) * sxx - sx * sx;
    if (denom == 0.0) throw UsageError("degenerate log-log fit");
    return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

}  // namespace

GkReport gk_estimate(const std::vector<std::pair<unsigned long, BigInt>>& dims, GkMethod method) {
    if (dims.size() < 4) throw UsageError("growth estimation needs at least 4 rows");
    std::vector<std::pair<unsigned long, BigInt>> rows = dims;
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    GkReport report;
    report.method = method;
    if (method == GkMethod::doubling_ratio) {
        auto find_dim = [&](unsigned long n) -> const BigInt* {
            auto it = std::lower_bound(rows.begin(), rows.end(), n,
                                       [](const auto& r, unsigned long v) { return r.first < v; });
            if (it == rows.end() || it->first != n) return nullptr;
            return &it->second;
        };
        std::vector<std::pair<unsigned long, double>> estimates;
        for (const auto& [n, dim] : rows) {
            if (n == 0) continue;
            const BigInt* twice = find_dim(2 * n);
            if (!twice) continue;
            estimates.emplace_back(n, log2_bigint(*twice) - log2_bigint(dim));
        }
        if (estimates.empty()) throw UsageError("no (n, 2n) pairs available for doubling ratio");
        const auto& last = estimates.back();
        report.estimate = last.second;
        report.n_used = last.first;
        double lo = last.second, hi = last.second;
        if (estimates.size() >= 2) {
            double prev = estimates[estimates.size() - 2].second;
            lo = std::min(lo, prev);
            hi = std::max(hi, prev);
        }
        report.interval_lo = lo;
        report.interval_hi = hi;
    } else {
        std::vector<std::pair<unsigned long, BigInt>> half(rows.begin() + rows.size() / 2,
                                                           rows.end());
        double slope_half = loglog_slope(half);
        report.estimate = slope_half;
        report.n_used = rows.back().first;
        double lo = slope_half, hi = slope_half;
        if (rows.size() >= 8) {
            std::vector<std::pair<unsigned long, BigInt>> quarter(
                rows.begin() + (3 * rows.size()) / 4, rows.end());
            double slope_quarter = loglog_slope(quarter);
            lo = std::min(lo, slope_quarter);
            hi = std::max(hi, slope_quarter);
        }
        report.interval_lo = lo;
        report.interval_hi = hi;
    }
    return report;
}

std::vector<std::pair<unsigned long, BigInt>> counting_table_pow2(const Presentation& pres,
                                                                  unsigned max_log2) {
    if (max_log2 > 62) throw UsageError("counting table capped at 2^62");
    std::vector<std::pair<unsigned long, BigInt>> rows;
    for (unsigned e = 0; e <= max_log2; ++e) {
        unsigned long n = 1ul << e;
        rows.emplace_back(n, count_normal_monomials(pres, n));
    }
    return rows;
}

AuditReport paper_formula_audit(unsigned long max_n) {
    AuditReport report;
    for (unsigned long n = 0; n <= max_n; ++n) {
        BigInt nn(static_cast<unsigned long>(n));
        BigInt closed = (nn * nn * nn + 6 * nn * nn + 11 * nn) / 6;
        BigInt truth = binomial(n + 3, 3);
        AuditRow row{n, closed, truth, truth - closed};
        if (row.diff != 1) report.diff_always_one = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_growth_csv(std::ostream& out, const GrowthTable& table, const Presentation& pres) {
    const bool is_a = pres.gens()->size() == 3;
    out << "n,dim_counted,dim_bruteforce,paper_formula,method\n";
    for (const auto& row : table.rows) {
        out << row.n << ',' << row.dim_counted.get_str() << ',';
        if (row.dim_bruteforce) out << *row.dim_bruteforce;
        out << ',';
        if (is_a) {
            BigInt nn(row.n);
            out << BigInt((nn * nn * nn + 6 * nn * nn + 11 * nn) / 6).get_str();
        }
        out << ',';
        out << (row.method == GrowthRow::Method::counted ? "counted" : "counted+bruteforce");
        out << '\n';
    }
}

}  // namespace gkwb
