#pragma once

#include <random>

#include "gkwb/presentation.hpp"

namespace gkwb {

/// Deterministic random source for corpus generation. Sampling goes through
/// explicit modulo reduction of the raw mt19937_64 stream, so corpora are
/// identical across standard libraries.
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next_below(std::uint64_t k);  // uniform-ish in [0, k)
    long next_in(long lo, long hi);             // inclusive bounds

private:
    std::mt19937_64 eng_;
};

/// Random nonzero element in normal form: 1..max_terms sorted monomials of
/// total degree <= max_deg with nonzero coefficients in [coeff_lo, coeff_hi].
Poly random_normal_element(const Presentation& pres, unsigned max_deg, long coeff_lo,
                           long coeff_hi, unsigned max_terms, CorpusRng& rng);

/// Fixed-seed corpus with the default coefficient range -3..3 and up to 4
/// terms per element.
std::vector<Poly> make_corpus(const Presentation& pres, std::size_t count, unsigned max_deg,
                              std::uint64_t seed);

}  // namespace gkwb
