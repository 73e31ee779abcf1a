#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "gkwb/linalg.hpp"
#include "gkwb/rewrite.hpp"

namespace gkwb {

enum class Family { A, An };

/// Index into the x^a y^p (x+z)^s family.
struct XZKey {
    unsigned a = 0, p = 0, s = 0;
    bool operator==(const XZKey& o) const { return a == o.a && p == o.p && s == o.s; }
    bool operator<(const XZKey& o) const {
        if (a != o.a) return a < o.a;
        if (p != o.p) return p < o.p;
        return s < o.s;
    }
};

/// Element written over the x^a y^p (x+z)^s family.
struct XZBasisElem {
    std::map<XZKey, Rational> coeffs;
    bool is_zero() const { return coeffs.empty(); }
    void add(const XZKey& k, const Rational& c);
    unsigned max_s() const;
    unsigned max_p_at_s(unsigned s) const;
};

/// A concrete confluent presentation of A or of a member of the A_n family:
/// generators, oriented rules, distinguished generator roles, the fast
/// normal-form engine, and the change of coordinates to the
/// x^a y^p (x+z)^s family.
///
/// Construction verifies confluence (every S-polynomial reduces to zero) and
/// that the irreducible words of small degree are exactly the sorted
/// monomials; it throws TheoryViolation otherwise.
class Presentation {
public:
    static Presentation make_A();
    static Presentation make_An(unsigned n);
    // "A" or "An:<n>"
    static Presentation from_selector(std::string_view selector);

    Family family() const { return family_; }
    unsigned n() const { return n_; }
    std::string selector() const;

    const GensPtr& gens() const { return rules_.gens(); }
    const RuleSystem& rules() const { return rules_; }

    Letter x_role() const { return x_role_; }
    Letter y_role() const { return y_role_; }
    Letter z_role() const { return z_role_; }
    Letter aux_x(unsigned i) const;  // x_i, i in 2..n
    Letter aux_z(unsigned i) const;  // z_i, i in 2..n
    bool is_aux(Letter l) const;

    // --- normal-form arithmetic -------------------------------------------
    // These rely on confluence (verified at construction) and memoize word
    // normal forms; results agree with rewrite::normal_form.
    Poly nf(const Poly& p) const;
    Poly nf_word(const Word& w) const;
    Poly nf_mul(const Poly& a, const Poly& b) const;
    Poly nf_pow(const Poly& a, unsigned e) const;

    Poly one() const { return Poly::constant(gens(), Rational(1)); }
    Poly constant(const Rational& c) const { return Poly::constant(gens(), c); }
    Poly gen_poly(Letter a) const { return Poly::generator(gens(), a); }
    Poly xz_sum() const;                 // x + z (role generators)
    Poly xz_power(unsigned s) const;     // normal form of (x+z)^s, cached
    // normal form of x^a y^p (x+z)^s
    Poly xz_monomial_nf(unsigned a, unsigned p, unsigned s) const;

    // --- change of coordinates --------------------------------------------
    struct XZResult {
        bool ok = false;
        XZBasisElem elem;
        Poly residual;  // the part that could not be matched, when !ok
    };
    /// Solve p = sum c_{aps} x^a y^p (x+z)^s degreewise (top degree first).
    /// With kernel_only the family is restricted to a = 0. Requires p free of
    /// auxiliary generators.
    XZResult to_xz_basis(const Poly& p, bool kernel_only = false) const;
    Poly from_xz_basis(const XZBasisElem& e) const;

    /// Re-check that irreducible words of degree <= max_deg are exactly the
    /// sorted monomials. Throws TheoryViolation on failure.
    void verify_normal_words(unsigned max_deg) const;

private:
    Presentation(Family family, unsigned n, RuleSystem rules, Letter x_role, Letter y_role,
                 Letter z_role);

    struct DegreeBasis {
        std::vector<XZKey> keys;
        std::vector<Poly> full;   // normal forms of the family members
        PolySpan top_span{true};  // their top-degree components, with tracking
    };
    const DegreeBasis& degree_basis(unsigned degree, bool kernel_only) const;

    // Memo state. Copies of a Presentation share it; every cached value is a
    // pure function of the immutable rule system, so sharing is sound.
    struct Caches {
        std::shared_mutex nf_mutex;
        std::unordered_map<Word, Poly, WordHash> nf_cache;
        std::size_t nf_cached_terms = 0;
        std::shared_mutex pow_mutex;
        std::vector<Poly> xz_powers;
        std::shared_mutex basis_mutex;
        std::map<std::pair<unsigned, bool>, std::shared_ptr<const DegreeBasis>> basis_cache;
    };

    Family family_;
    unsigned n_;
    RuleSystem rules_;
    Letter x_role_, y_role_, z_role_;
    // memo admission: words up to this length, until the total stored term
    // count reaches the budget (keeps worst-case memory bounded)
    std::size_t cache_len_cap_ = 24;
    std::size_t cache_term_budget_ = 4'000'000;
    std::shared_ptr<Caches> caches_;
};

}  // namespace gkwb
