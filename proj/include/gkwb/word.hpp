#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkwb {

using Letter = std::uint8_t;

/// Ordered alphabet of generator names. The position of a name fixes the
/// lex component of the deg-lex order.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter i) const { return names_.at(i); }
    std::optional<Letter> index_of(std::string_view name) const;

    bool operator==(const GeneratorSet& o) const { return names_ == o.names_; }
    bool operator!=(const GeneratorSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using GensPtr = std::shared_ptr<const GeneratorSet>;

GensPtr make_gens(std::vector<std::string> names);

/// Monomial of the free algebra: a finite sequence of generator indices.
/// The empty word is the unit 1.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    static Word unit() { return Word{}; }
    static Word single(Letter a) { return Word{{a}}; }
    static Word power(Letter a, std::size_t e);

    std::size_t degree() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    std::size_t count(Letter a) const;

    Word concat(const Word& o) const;
    Word sub(std::size_t pos, std::size_t len) const;
    bool matches_at(const Word& pattern, std::size_t pos) const;
    // letters nondecreasing (the normal words of the A-family presentations)
    bool is_sorted() const;

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return letters != o.letters; }
};

enum class Ordering { less, equal, greater };

/// Deg-lex: shorter word first; equal lengths letterwise by generator index.
int deg_lex_cmp(const Word& a, const Word& b);
Ordering word_cmp(const Word& a, const Word& b);

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const { return deg_lex_cmp(a, b) < 0; }
};
struct DegLexGreater {
    bool operator()(const Word& a, const Word& b) const { return deg_lex_cmp(a, b) > 0; }
};

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

// "x^2*y*z^3"; the unit word prints as "1"
std::string word_to_string(const Word& w, const GeneratorSet& gens);

// all words of exactly `degree` over `gens`, in lex order of letter sequences
std::vector<Word> all_words_of_degree(const GeneratorSet& gens, std::size_t degree);
// all sorted words of exactly `degree`
std::vector<Word> sorted_words_of_degree(const GeneratorSet& gens, std::size_t degree);

}  // namespace gkwb
