#include "gkwb/linalg.hpp"

namespace gkwb {

namespace {

void comb_add_scaled(PolySpan::Combination& into, const PolySpan::Combination& from,
                     const Rational& c) {
    for (const auto& [idx, k] : from) {
        auto [it, inserted] = into.emplace(idx, k * c);
        if (!inserted) {
            it->second += k * c;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

}  // namespace

PolySpan::Reduction PolySpan::reduce(const Poly& v) const {
    Reduction r{v, {}};
    while (!r.residual.is_zero()) {
        auto it = pivots_.find(r.residual.leading_word());
        if (it == pivots_.end()) break;
        Rational lc = r.residual.leading_coeff();  // pivot rows have leading coeff 1
        r.residual.add_scaled(it->second.vec, -lc);
        if (track_) comb_add_scaled(r.combination, it->second.comb, lc);
    }
    return r;
}

bool PolySpan::insert(const Poly& v) {
    std::size_t index = inserted_++;
    Reduction r = reduce(v);
    if (r.residual.is_zero()) return false;
    Rational lc = r.residual.leading_coeff();
    Row row{std::move(r.residual), {}};
    row.vec *= lc.inverse();
    if (track_) {
        // row.vec = (v - combination·inserted) / lc
        row.comb = std::move(r.combination);
        for (auto& [idx, k] : row.comb) k = -k;
        row.comb[index] = Rational(1);
        for (auto& [idx, k] : row.comb) k /= lc;
    }
    pivots_.emplace(row.vec.leading_word(), std::move(row));
    return true;
}

std::size_t rank_of(const std::vector<Poly>& vecs) {
    PolySpan span;
    for (const auto& v : vecs) span.insert(v);
    return span.rank();
}

}  // namespace gkwb
