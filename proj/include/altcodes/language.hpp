#pragma once

// Words and finite languages over a finite alphabet, with the set algebra
// used throughout the library: products, left and right quotients, proper
// prefix and suffix sets, first-letter partitions, powers, reversal and
// exact Kraft sums.
//
// A FiniteLanguage either carries a declared alphabet or infers one as the
// set of letters occurring in its words. Derived languages inherit the
// declared alphabet of their operands when there is one.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "altcodes/errors.hpp"

namespace altcodes {

using Letter = char;
using Word = std::string;
using Alphabet = std::set<Letter>;
using Rational = boost::rational<boost::multiprecision::cpp_int>;

/// Length first, then lexicographic. The canonical order for words.
struct ShortLex {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Letters are printable, non-blank ASCII characters other than '#',
/// which starts comments in language files.
inline bool is_valid_letter(Letter c) noexcept {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x21 && u <= 0x7e && c != '#';
}

inline Word reverse(std::string_view w) { return Word(w.rbegin(), w.rend()); }

class FiniteLanguage {
public:
    using container_type = std::set<Word, ShortLex>;
    using const_iterator = container_type::const_iterator;

    FiniteLanguage() = default;

    FiniteLanguage(std::initializer_list<Word> words) : FiniteLanguage(container_type(words)) {}

    explicit FiniteLanguage(container_type words) : words_(std::move(words)) {
        for (const auto& w : words_)
            for (Letter c : w) {
                check_letter(c);
                alphabet_.insert(c);
            }
    }

    explicit FiniteLanguage(const std::vector<Word>& words)
        : FiniteLanguage(container_type(words.begin(), words.end())) {}

    /// Language over an explicitly declared alphabet; every word must use
    /// only declared letters.
    FiniteLanguage(Alphabet alphabet, container_type words)
        : alphabet_(std::move(alphabet)), words_(std::move(words)), declared_(true) {
        for (Letter c : alphabet_) check_letter(c);
        for (const auto& w : words_)
            for (Letter c : w)
                if (!alphabet_.contains(c))
                    throw alphabet_mismatch(std::string("letter '") + c + "' of word '" + w +
                                            "' is not in the declared alphabet");
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    bool alphabet_declared() const noexcept { return declared_; }
    const container_type& words() const noexcept { return words_; }
    std::vector<Word> to_vector() const { return {words_.begin(), words_.end()}; }

    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(std::string_view w) const { return words_.find(w) != words_.end(); }
    bool contains_empty_word() const { return contains(std::string_view{}); }

    const_iterator begin() const noexcept { return words_.begin(); }
    const_iterator end() const noexcept { return words_.end(); }

    /// Shortest word length (min X). Undefined on the empty language.
    std::size_t min_length() const { return words_.empty() ? 0 : words_.begin()->size(); }
    std::size_t max_length() const { return words_.empty() ? 0 : words_.rbegin()->size(); }

    /// Same alphabet context, different words.
    FiniteLanguage derive(container_type words) const {
        if (declared_) return FiniteLanguage(alphabet_, std::move(words));
        return FiniteLanguage(std::move(words));
    }

    /// Set equality of the words; the alphabet is context, not content.
    friend bool operator==(const FiniteLanguage& a, const FiniteLanguage& b) { return a.words_ == b.words_; }

private:
    static void check_letter(Letter c) {
        if (!is_valid_letter(c))
            throw contract_violation("invalid letter (code " +
                                     std::to_string(static_cast<unsigned char>(c)) + ")");
    }

    Alphabet alphabet_;
    container_type words_;
    bool declared_ = false;
};

/// Canonical order on languages: lexicographic over the short-lex sorted
/// word lists.
inline bool canonical_less(const FiniteLanguage& a, const FiniteLanguage& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ShortLex{});
}

inline std::string display(std::string_view w) { return w.empty() ? std::string("ε") : std::string(w); }

inline std::string to_string(const FiniteLanguage& x) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : x) {
        if (!first) out += ", ";
        out += display(w);
        first = false;
    }
    return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const FiniteLanguage& x) { return os << to_string(x); }

namespace detail {

struct AlphabetContext {
    bool declared = false;
    Alphabet alphabet;
};

inline AlphabetContext merge_context(const FiniteLanguage& x, const FiniteLanguage& y) {
    if (x.alphabet_declared() && y.alphabet_declared()) {
        if (x.alphabet() != y.alphabet()) throw alphabet_mismatch("operands declare different alphabets");
        return {true, x.alphabet()};
    }
    const FiniteLanguage* declared = x.alphabet_declared() ? &x : y.alphabet_declared() ? &y : nullptr;
    if (declared == nullptr) return {};
    const FiniteLanguage& other = declared == &x ? y : x;
    for (Letter c : other.alphabet())
        if (!declared->alphabet().contains(c))
            throw alphabet_mismatch(std::string("letter '") + c + "' is not in the declared alphabet");
    return {true, declared->alphabet()};
}

inline FiniteLanguage make(const AlphabetContext& ctx, FiniteLanguage::container_type words) {
    if (ctx.declared) return FiniteLanguage(ctx.alphabet, std::move(words));
    return FiniteLanguage(std::move(words));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Boolean set operations
// ---------------------------------------------------------------------------

inline FiniteLanguage unite(const FiniteLanguage& x, const FiniteLanguage& y) {
    auto ctx = detail::merge_context(x, y);
    FiniteLanguage::container_type out(x.words());
    out.insert(y.begin(), y.end());
    return detail::make(ctx, std::move(out));
}

inline FiniteLanguage intersect(const FiniteLanguage& x, const FiniteLanguage& y) {
    auto ctx = detail::merge_context(x, y);
    FiniteLanguage::container_type out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()), ShortLex{});
    return detail::make(ctx, std::move(out));
}

inline FiniteLanguage difference(const FiniteLanguage& x, const FiniteLanguage& y) {
    auto ctx = detail::merge_context(x, y);
    FiniteLanguage::container_type out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()), ShortLex{});
    return detail::make(ctx, std::move(out));
}

inline bool is_subset(const FiniteLanguage& x, const FiniteLanguage& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end(), ShortLex{});
}

inline FiniteLanguage without_empty_word(const FiniteLanguage& x) {
    auto words = x.words();
    words.erase(Word{});
    return x.derive(std::move(words));
}

// ---------------------------------------------------------------------------
// Products and quotients
// ---------------------------------------------------------------------------

/// XY = {xy | x in X, y in Y}. Duplicates collapse, so |XY| <= |X|.|Y|.
inline FiniteLanguage product(const FiniteLanguage& x, const FiniteLanguage& y) {
    auto ctx = detail::merge_context(x, y);
    FiniteLanguage::container_type out;
    for (const auto& a : x)
        for (const auto& b : y) out.insert(a + b);
    return detail::make(ctx, std::move(out));
}

/// u^-1 X = {v | uv in X}
inline FiniteLanguage left_quotient(std::string_view u, const FiniteLanguage& x) {
    FiniteLanguage::container_type out;
    for (const auto& w : x)
        if (std::string_view(w).starts_with(u)) out.insert(w.substr(u.size()));
    return x.derive(std::move(out));
}

/// U^-1 X = union over u in U of u^-1 X
inline FiniteLanguage left_quotient(const FiniteLanguage& u, const FiniteLanguage& x) {
    auto ctx = detail::merge_context(u, x);
    FiniteLanguage::container_type out;
    for (const auto& p : u)
        for (const auto& w : x)
            if (std::string_view(w).starts_with(p)) out.insert(w.substr(p.size()));
    return detail::make(ctx, std::move(out));
}

/// X u^-1 = {v | vu in X}
inline FiniteLanguage right_quotient(const FiniteLanguage& x, std::string_view u) {
    FiniteLanguage::container_type out;
    for (const auto& w : x)
        if (std::string_view(w).ends_with(u)) out.insert(w.substr(0, w.size() - u.size()));
    return x.derive(std::move(out));
}

/// X U^-1 = union over u in U of X u^-1
inline FiniteLanguage right_quotient(const FiniteLanguage& x, const FiniteLanguage& u) {
    auto ctx = detail::merge_context(x, u);
    FiniteLanguage::container_type out;
    for (const auto& s : u)
        for (const auto& w : x)
            if (std::string_view(w).ends_with(s)) out.insert(w.substr(0, w.size() - s.size()));
    return detail::make(ctx, std::move(out));
}

// ---------------------------------------------------------------------------
// Prefixes and suffixes
// ---------------------------------------------------------------------------

/// Pref(w): every prefix of w other than w itself, including the empty word.
inline FiniteLanguage proper_prefixes(std::string_view w) {
    FiniteLanguage::container_type out;
    for (std::size_t n = 0; n < w.size(); ++n) out.emplace(w.substr(0, n));
    return FiniteLanguage(std::move(out));
}

inline FiniteLanguage proper_suffixes(std::string_view w) {
    FiniteLanguage::container_type out;
    for (std::size_t n = 1; n <= w.size(); ++n) out.emplace(w.substr(n));
    return FiniteLanguage(std::move(out));
}

/// Pref(X)
inline FiniteLanguage proper_prefixes(const FiniteLanguage& x) {
    FiniteLanguage::container_type out;
    for (const auto& w : x)
        for (std::size_t n = 0; n < w.size(); ++n) out.insert(w.substr(0, n));
    return x.derive(std::move(out));
}

/// Suff(X)
inline FiniteLanguage proper_suffixes(const FiniteLanguage& x) {
    FiniteLanguage::container_type out;
    for (const auto& w : x)
        for (std::size_t n = 1; n <= w.size(); ++n) out.insert(w.substr(n));
    return x.derive(std::move(out));
}

// ---------------------------------------------------------------------------
// First-letter partition
// ---------------------------------------------------------------------------

/// The non-empty blocks Z_a = {w in Z | w begins with a}.
struct FirstLetterPartition {
    std::map<Letter, FiniteLanguage> blocks;

    std::map<Letter, std::size_t> block_sizes() const {
        std::map<Letter, std::size_t> sizes;
        for (const auto& [letter, block] : blocks) sizes.emplace(letter, block.size());
        return sizes;
    }

    const FiniteLanguage& block(Letter a) const { return blocks.at(a); }
};

inline FirstLetterPartition partition_by_first_letter(const FiniteLanguage& z) {
    if (z.contains_empty_word()) throw contract_violation("partition_by_first_letter: language contains the empty word");
    std::map<Letter, FiniteLanguage::container_type> raw;
    for (const auto& w : z) raw[w.front()].insert(w);
    FirstLetterPartition p;
    for (auto& [letter, words] : raw) p.blocks.emplace(letter, z.derive(std::move(words)));
    return p;
}

// ---------------------------------------------------------------------------
// Powers, reversal, Kraft sums
// ---------------------------------------------------------------------------

/// X^0 = {ε}, X^(n+1) = X^n X
inline FiniteLanguage power(const FiniteLanguage& x, std::size_t n) {
    FiniteLanguage result = x.derive({Word{}});
    for (std::size_t i = 0; i < n; ++i) result = product(result, x);
    return result;
}

inline FiniteLanguage reverse(const FiniteLanguage& x) {
    FiniteLanguage::container_type out;
    for (const auto& w : x) out.insert(reverse(std::string_view(w)));
    return x.derive(std::move(out));
}

/// Sum over x in X of k^-|x|, k the alphabet size, as an exact fraction.
inline Rational kraft_sum(const FiniteLanguage& x) {
    using boost::multiprecision::cpp_int;
    if (x.contains_empty_word()) throw contract_violation("kraft_sum: language contains the empty word");
    if (x.empty()) return Rational(0);
    const cpp_int k = static_cast<unsigned>(x.alphabet().size());
    const std::size_t top = x.max_length();
    cpp_int numerator = 0;
    for (const auto& w : x) numerator += boost::multiprecision::pow(k, static_cast<unsigned>(top - w.size()));
    return Rational(numerator, boost::multiprecision::pow(k, static_cast<unsigned>(top)));
}

}  // namespace altcodes
