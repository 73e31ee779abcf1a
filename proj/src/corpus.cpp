#include "gkwb/corpus.hpp"

#include <algorithm>

#include "gkwb/errors.hpp"

namespace gkwb {

std::uint64_t CorpusRng::next_below(std::uint64_t k) {
    if (k == 0) throw UsageError("empty sampling range");
    return eng_() % k;
}

long CorpusRng::next_in(long lo, long hi) {
    if (hi < lo) throw UsageError("empty sampling range");
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Poly random_normal_element(const Presentation& pres, unsigned max_deg, long coeff_lo,
                           long coeff_hi, unsigned max_terms, CorpusRng& rng) {
    const std::size_t g = pres.gens()->size();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly p = Poly::zero(pres.gens());
        const unsigned terms = 1 + static_cast<unsigned>(rng.next_below(max_terms));
        for (unsigned t = 0; t < terms; ++t) {
            const unsigned deg = static_cast<unsigned>(rng.next_below(max_deg + 1));
            std::vector<Letter> letters(deg);
            for (auto& l : letters) l = static_cast<Letter>(rng.next_below(g));
            std::sort(letters.begin(), letters.end());
            long c = 0;
            while (c == 0) c = rng.next_in(coeff_lo, coeff_hi);
            p.add_term(Word{std::move(letters)}, Rational(c));
        }
        if (!p.is_zero()) return p;
    }
    throw InternalError("could not sample a nonzero element");
}

std::vector<Poly> make_corpus(const Presentation& pres, std::size_t count, unsigned max_deg,
                              std::uint64_t seed) {
    CorpusRng rng(seed);
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_normal_element(pres, max_deg, -3, 3, 4, rng));
    return out;
}

}  // namespace gkwb
