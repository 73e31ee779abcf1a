#include "gkwb/word.hpp"

#include <algorithm>
#include <cctype>

#include "gkwb/errors.hpp"

namespace gkwb {

namespace {

bool valid_generator_name(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) return false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i == s.size();
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw UsageError("generator set must be nonempty");
    if (names_.size() > 200) throw UsageError("too many generators");
    for (const auto& n : names_) {
        if (!valid_generator_name(n))
            throw UsageError("bad generator name: '" + n + "' (letters then optional digits)");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw UsageError("duplicate generator name: " + names_[i]);
}

std::optional<Letter> GeneratorSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

GensPtr make_gens(std::vector<std::string> names) {
    return std::make_shared<const GeneratorSet>(std::move(names));
}

Word Word::power(Letter a, std::size_t e) {
    Word w;
    w.letters.assign(e, a);
    return w;
}

std::size_t Word::count(Letter a) const {
    return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), a));
}

Word Word::concat(const Word& o) const {
    Word w;
    w.letters.reserve(letters.size() + o.letters.size());
    w.letters = letters;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    Word w;
    w.letters.assign(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                     letters.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.letters.size() > letters.size()) return false;
    return std::equal(pattern.letters.begin(), pattern.letters.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool Word::is_sorted() const {
    return std::is_sorted(letters.begin(), letters.end());
}

int deg_lex_cmp(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        if (a.letters[i] != b.letters[i]) return a.letters[i] < b.letters[i] ? -1 : 1;
    }
    return 0;
}

Ordering word_cmp(const Word& a, const Word& b) {
    int c = deg_lex_cmp(a, b);
    return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const {
    // FNV-1a over the letter bytes
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters) {
        h ^= static_cast<std::size_t>(l);
        h *= 1099511628211ull;
    }
    h ^= w.letters.size();
    h *= 1099511628211ull;
    return h;
}

std::string word_to_string(const Word& w, const GeneratorSet& gens) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        if (!out.empty()) out += '*';
        out += gens.name(w.letters[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<Word> all_words_of_degree(const GeneratorSet& gens, std::size_t degree) {
    std::vector<Word> out;
    Word cur;
    cur.letters.assign(degree, 0);
    const std::size_t g = gens.size();
    if (degree == 0) return {Word::unit()};
    while (true) {
        out.push_back(cur);
        std::size_t i = degree;
        while (i > 0) {
            --i;
            if (cur.letters[i] + 1u < g) {
                ++cur.letters[i];
                std::fill(cur.letters.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.letters.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
    }
}

namespace {

void sorted_words_rec(std::size_t g, std::size_t degree, std::size_t lo,
                      std::vector<Letter>& seq, std::vector<Word>& out) {
    if (seq.size() == degree) {
        out.push_back(Word{seq});
        return;
    }
    for (std::size_t a = lo; a < g; ++a) {
        seq.push_back(static_cast<Letter>(a));
        sorted_words_rec(g, degree, a, seq, out);
        seq.pop_back();
    }
}

}  // namespace

std::vector<Word> sorted_words_of_degree(const GeneratorSet& gens, std::size_t degree) {
    std::vector<Word> out;
    std::vector<Letter> seq;
    sorted_words_rec(gens.size(), degree, 0, seq, out);
    return out;
}

}  // namespace gkwb
