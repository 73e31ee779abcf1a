#include "gkwb/poly.hpp"

#include "gkwb/errors.hpp"

namespace gkwb {

Poly::Poly(GensPtr gens) : gens_(std::move(gens)) {
    if (!gens_) throw UsageError("poly without a generator set");
}

Poly Poly::constant(GensPtr gens, const Rational& c) {
    Poly p(std::move(gens));
    p.add_term(Word::unit(), c);
    return p;
}

Poly Poly::monomial(GensPtr gens, const Word& w, const Rational& c) {
    Poly p(std::move(gens));
    for (Letter l : w.letters)
        if (l >= p.gens_->size()) throw UsageError("word letter out of range for generator set");
    p.add_term(w, c);
    return p;
}

Poly Poly::generator(GensPtr gens, Letter a) {
    return monomial(std::move(gens), Word::single(a));
}

bool Poly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

std::optional<std::size_t> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();  // leading word has maximal degree
}

std::size_t Poly::degree_in(Letter a) const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.count(a));
    return d;
}

const Word& Poly::leading_word() const {
    if (terms_.empty()) throw UsageError("leading word of the zero element");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw UsageError("leading coefficient of the zero element");
    return terms_.begin()->second;
}

Rational Poly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::add_scaled(const Poly& o, const Rational& c) {
    check_same_gens(o);
    if (c.is_zero()) return *this;
    for (const auto& [w, k] : o.terms_) add_term(w, k * c);
    return *this;
}

Poly Poly::component(std::size_t deg) const {
    Poly out(gens_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == deg) out.terms_.emplace(w, c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(gens_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    return add_scaled(o, Rational(1));
}

Poly& Poly::operator-=(const Poly& o) {
    return add_scaled(o, Rational(-1));
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, k] : terms_) k *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_gens(b);
    Poly out(a.gens_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa.concat(wb), ca * cb);
    return out;
}

bool Poly::operator==(const Poly& o) const {
    check_same_gens(o);
    return terms_ == o.terms_;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += '-';
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (w.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += word_to_string(w, *gens_);
        } else {
            out += mag.to_string();
            out += '*';
            out += word_to_string(w, *gens_);
        }
    }
    return out;
}

void Poly::check_same_gens(const Poly& o) const {
    if (gens_ == o.gens_) return;
    if (*gens_ != *o.gens_) throw UsageError("mixing elements over different generator sets");
}

Poly poly_pow(const Poly& a, unsigned e) {
    Poly out = Poly::constant(a.gens(), Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * a;
    return out;
}

Poly commutator(const Poly& a, const Poly& b) {
    return a * b - b * a;
}

}  // namespace gkwb
