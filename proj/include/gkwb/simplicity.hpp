#pragma once

#include <optional>
#include <tuple>

#include "json.hpp"

#include "gkwb/operators.hpp"

namespace gkwb {

/// Replayable witness that the two-sided ideal of `input` contains a nonzero
/// scalar: applying `steps` to `input` yields exactly final_scalar * 1.
struct Certificate {
    std::string algebra;  // selector, "A" or "An:<n>"
    Poly input;
    std::vector<OperatorTag> steps;
    Rational final_scalar;
};

struct TraceStep {
    OperatorTag tag;
    std::string intermediate;  // canonical text, or "(elided: N terms)" above the cap
    std::size_t term_count = 0;
    // (max y-degree, max (x+z)-degree) while the value lives in the kernel family
    std::optional<std::pair<unsigned, unsigned>> kernel_bidegree;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    std::size_t elide_above = 50;
};

struct ReduceOutcome {
    bool ok = false;
    Certificate cert;
    ReductionTrace trace;
    // set when the [.,y]-kernel landing failed: the part of the last nonzero
    // iterate that is not a combination of y^p (x+z)^s
    std::optional<Poly> kernel_residual;
    std::string message;
};

/// Reduce a nonzero element to a nonzero scalar by ideal-preserving steps.
///
/// Phase 0 (A_n only): for i = n..2 apply AdX(i) deg_{z_i} times, then
/// RadZ(i) deg_{x_i} times, eliminating the auxiliary generators.
/// Phase B: iterate Ry, keeping the last nonzero iterate; express it over the
/// kernel family y^p (x+z)^s (failure here is reported as a theory-violation
/// outcome carrying the residual, not thrown).
/// Phase C: with N = top (x+z)-degree and M = top y-degree in that layer,
/// apply Lx(N) exactly M+1 times until the (x+z)-degree is zero, then Lx(0)
/// deg_y times; the surviving scalar is M! times the top y-coefficient.
/// Phase C runs in (y, x+z) coordinates via the closed-form action; the
/// verifier replays every step in plain normal-form arithmetic.
ReduceOutcome reduce_to_scalar(const Poly& w, const Presentation& pres);

/// Independent replay: apply_op on each step, then compare against
/// final_scalar * 1 and require final_scalar != 0.
bool verify_certificate(const Certificate& cert, const Presentation& pres,
                        std::string* mismatch = nullptr);

/// Brute-force check that 1 lies in span{normal_form(a*w*b)} over normal
/// monomials a, b of degree <= deg_bound, with an explicit combination when
/// it does.
struct OracleOutcome {
    bool contains_one = false;
    // (a, b, c) triples with sum c * a*w*b = 1
    std::vector<std::tuple<Word, Word, Rational>> witness;
    std::size_t rows_inserted = 0;
    std::size_t rank = 0;
};

OracleOutcome ideal_membership_oracle(const Poly& w, const Presentation& pres,
                                      unsigned deg_bound, std::size_t pair_budget = 50'000);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j, const Presentation& pres);

}  // namespace gkwb
