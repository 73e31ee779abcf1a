#pragma once

#include <vector>

#include "gkwb/presentation.hpp"

namespace gkwb {

/// The ideal-preserving linear operators: the right bracket w -> [w, y], the
/// weighted left bracket w -> [x, w] + j*y*w, and the auxiliary-pair strip
/// operators of the A_n family, w -> [x_i, w] and w -> [w, z_i] for i >= 2.
struct OperatorTag {
    enum class Kind { ry, lx, ad_x, rad_z };
    Kind kind = Kind::ry;
    unsigned param = 0;  // lx: the weight j; ad_x / rad_z: the pair index i

    static OperatorTag ry() { return {Kind::ry, 0}; }
    static OperatorTag lx(unsigned j) { return {Kind::lx, j}; }
    static OperatorTag ad_x(unsigned i) { return {Kind::ad_x, i}; }
    static OperatorTag rad_z(unsigned i) { return {Kind::rad_z, i}; }

    // "Ry", "Lx:<j>", "AdX:<i>", "RadZ:<i>"
    std::string token() const;
    static OperatorTag from_token(std::string_view token);

    bool operator==(const OperatorTag& o) const { return kind == o.kind && param == o.param; }
};

/// Apply an operator and return the normal form of the result. AdX/RadZ on a
/// presentation without auxiliary generators is a usage error.
Poly apply_op(const OperatorTag& tag, const Poly& w, const Presentation& pres);

/// Combined degree in the x and z role generators.
std::size_t xz_degree(const Poly& p, const Presentation& pres);

// --- bounded-exhaustive identity suites (CLI `lemma-check` catalog) --------

struct IdentityFailure {
    std::string params;
    std::string detail;
};

struct IdentityReport {
    int suite = 0;
    unsigned long cases = 0;
    std::vector<IdentityFailure> failures;
    bool all_pass() const { return failures.empty(); }
};

/// Suite 2: the commutator power identities
///   [x^k,y] = k x^{k-1}   [x,y^k] = k y^{k-1}   [y,z^k] = k z^{k-1}
///   [y^k,z] = k y^{k-1}
///   [x,(x+z)^k] = -k(y(x+z)^k + (x+z)^{k-1}) = [(x+z)^k,z]
///   [(y+z)^k,z] = k (y+z)^{k-1}   [y,(x+z)^k] = 0
/// for k = 0..kmax (k*anything^{k-1} reads as 0 when k = 0).
IdentityReport power_identity_suite(const Presentation& pres, unsigned kmax);

/// Iterate w -> [w, y] until zero; returns all iterates including the final
/// zero. Throws TheoryViolation if the iteration count exceeds the x,z-degree
/// bound (non-nilpotency would contradict the algebra's structure).
std::vector<Poly> ry_orbit(const Poly& w0, const Presentation& pres);

/// The orbit-endpoint formula: w0 = sum alpha[p][k] x^{N-k} y^p z^k iterated
/// N times under [.,y] equals N! * sum_p (sum_k alpha[p][k] (-1)^k) y^p.
bool ry_endpoint_matches(const std::vector<std::vector<Rational>>& alpha, unsigned big_n,
                         unsigned big_m, const Presentation& pres);

/// z^k x = x(y+z)^k + tail with tail free of x.
struct ZkxParts {
    Poly head;
    Poly tail;
};
ZkxParts zkx_decompose(unsigned k, const Presentation& pres);  // throws on x in tail
/// Every y^i z^j with i+j = k carries a strictly positive coefficient in the
/// normal form of (y+z)^k.
bool yz_power_coeffs_positive(unsigned k, const Presentation& pres);

/// One step of the (x+z)-raising rewrite:
///   x^{N-s-k} y^p (x+z)^s z^k
///     = x^{N-s-1-k} y^p (x+z)^{s+1} z^k - x^{N-s-k-1} y^p (x+z)^s z^{k+1}
///     + p x^{N-s-1-k} y^{p-1} (x+z)^s z^k
///     - x^{N-s-1-k} y^p (s y (x+z)^s + s (x+z)^{s-1}) z^k
/// for 0 <= s <= N-1, 0 <= k <= N-s-1.
bool xz_raising_step_holds(unsigned big_n, unsigned s, unsigned k, unsigned p,
                           const Presentation& pres);

/// Closed form of the weighted left bracket on the kernel family:
///   (Lx,j)(y^i (x+z)^k) = i y^{i-1}(x+z)^k - k y^i (x+z)^{k-1}
///                         + (j-k) y^{i+1}(x+z)^k.
bool lx_action_closed_form_holds(unsigned i, unsigned k, unsigned j, const Presentation& pres);

/// Run one numbered suite (2, 4, 5, 6 or 7) with sweep bound `max` and
/// y-degree bound `max_p` where applicable.
IdentityReport identity_suite(int suite, unsigned max, unsigned max_p, const Presentation& pres);

}  // namespace gkwb
