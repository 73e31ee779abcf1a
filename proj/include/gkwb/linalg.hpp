#pragma once

#include <map>
#include <vector>

#include "gkwb/poly.hpp"

namespace gkwb {

/// Incremental exact row span over the rationals, with Poly rows keyed by
/// their leading words (sparse echelon form). Optionally tracks, for each
/// pivot row, its expression as a combination of the inserted vectors, so
/// membership witnesses can be extracted.
class PolySpan {
public:
    using Combination = std::map<std::size_t, Rational>;  // inserted index -> coeff

    explicit PolySpan(bool track_combinations = false) : track_(track_combinations) {}

    struct Reduction {
        Poly residual;
        Combination combination;  // residual = v - sum(combination * inserted)
    };

    /// Reduce v against the current pivots without inserting it.
    Reduction reduce(const Poly& v) const;

    /// Insert v; returns true when the rank grew. Every call consumes one
    /// insertion index (rank growth or not).
    bool insert(const Poly& v);

    bool contains(const Poly& v) const { return reduce(v).residual.is_zero(); }
    bool has_pivot(const Word& w) const { return pivots_.count(w) != 0; }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t inserted() const { return inserted_; }

private:
    struct Row {
        Poly vec;  // normalized: leading coefficient 1
        Combination comb;
    };
    bool track_;
    std::map<Word, Row, DegLexGreater> pivots_;
    std::size_t inserted_ = 0;
};

/// Rank of a finite family of elements.
std::size_t rank_of(const std::vector<Poly>& vecs);

}  // namespace gkwb
