#pragma once

// Seeded instance generators. Output depends only on the parameters and
// the seed: std::mt19937_64 is fully specified by the standard and bounded
// draws avoid the implementation-defined standard distributions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altcodes/alt_code.hpp"
#include "altcodes/code_check.hpp"
#include "altcodes/errors.hpp"
#include "altcodes/language.hpp"

namespace altcodes {

enum class GenKind { Prefix, MaximalPrefix, AltInduced, RandomCode, PlantedHard };

inline const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::Prefix: return "prefix";
        case GenKind::MaximalPrefix: return "maximal-prefix";
        case GenKind::AltInduced: return "alt-induced";
        case GenKind::RandomCode: return "random-code";
        case GenKind::PlantedHard: return "hard";
    }
    return "?";
}

inline std::optional<GenKind> parse_gen_kind(std::string_view s) {
    for (GenKind k : {GenKind::Prefix, GenKind::MaximalPrefix, GenKind::AltInduced, GenKind::RandomCode,
                      GenKind::PlantedHard})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

struct GenParams {
    GenKind kind = GenKind::Prefix;
    std::size_t alphabet_size = 2;
    /// Number of words. For PlantedHard: the size of every first-letter block.
    std::size_t size = 4;
    std::size_t max_length = 4;
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    FiniteLanguage language;
    /// The inducing pair built into alt-induced and hard instances.
    std::optional<Decomposition> planted;
};

/// Uniform integer in [0, n).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - top % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline Alphabet first_letters(std::size_t k) {
    if (k == 0 || k > 26) throw contract_violation("alphabet size must be between 1 and 26");
    Alphabet a;
    for (std::size_t i = 0; i < k; ++i) a.insert(static_cast<Letter>('a' + i));
    return a;
}

namespace detail {

/// min(k^l, cap) without overflow.
inline std::size_t capped_power(std::size_t k, std::size_t l, std::size_t cap) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < l && v < cap; ++i) v = std::min(cap, v * k);
    return v;
}

/// Grows a complete k-ary tree by splitting random leaves of depth < max_length
/// while `keep_going(leaf count)` holds. The leaves always form a maximal
/// prefix code.
template <class KeepGoing>
std::vector<Word> grow_leaves(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_length,
                              KeepGoing keep_going) {
    std::vector<Word> leaves{Word{}};
    auto needs_split = [&] { return (leaves.size() == 1 && leaves.front().empty()) || keep_going(leaves.size()); };
    while (needs_split()) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < leaves.size(); ++i)
            if (leaves[i].size() < max_length) open.push_back(i);
        if (open.empty()) throw contract_violation("generator parameters are infeasible");
        const std::size_t pick = open[uniform_below(rng, open.size())];
        const Word parent = leaves[pick];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
        for (Letter c : alphabet) leaves.push_back(parent + c);
    }
    return leaves;
}

}  // namespace detail

/// A random prefix code: random leaves of a random k-ary tree of depth
/// at most max_length.
inline FiniteLanguage random_prefix_code(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t size,
                                         std::size_t max_length) {
    if (size == 0 || max_length == 0 || detail::capped_power(alphabet.size(), max_length, size) < size)
        throw contract_violation("prefix code of size " + std::to_string(size) + " does not fit in length " +
                                 std::to_string(max_length));
    std::vector<Word> leaves =
        detail::grow_leaves(rng, alphabet, max_length, [&](std::size_t count) { return count < size; });
    for (std::size_t i = 0; i < size; ++i)
        std::swap(leaves[i], leaves[i + uniform_below(rng, leaves.size() - i)]);
    leaves.resize(size);
    return FiniteLanguage(alphabet, {leaves.begin(), leaves.end()});
}

/// A random prefix code with Kraft sum exactly 1. Feasible iff
/// size = 1 + j(k-1) for some j >= 1 and size <= k^max_length.
inline FiniteLanguage random_maximal_prefix_code(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t size,
                                                 std::size_t max_length) {
    const std::size_t k = alphabet.size();
    const bool shape_ok = k == 1 ? size == 1 : size >= k && (size - 1) % (k - 1) == 0;
    if (!shape_ok || max_length == 0 || detail::capped_power(k, max_length, size) < size)
        throw contract_violation("no maximal prefix code of size " + std::to_string(size) + " over " +
                                 std::to_string(k) + " letters within length " + std::to_string(max_length));
    std::vector<Word> leaves =
        detail::grow_leaves(rng, alphabet, max_length, [&](std::size_t count) { return count < size; });
    return FiniteLanguage(alphabet, {leaves.begin(), leaves.end()});
}

/// Rejection-samples `size` distinct random words until they form a code.
inline FiniteLanguage random_code(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t size,
                                  std::size_t max_length, std::size_t attempts = 10'000) {
    std::size_t available = 0;
    for (std::size_t l = 1; l <= max_length; ++l) available += detail::capped_power(alphabet.size(), l, size + 1);
    if (size == 0 || available < size) throw contract_violation("random code parameters are infeasible");
    const std::vector<Letter> letters(alphabet.begin(), alphabet.end());
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        FiniteLanguage::container_type words;
        while (words.size() < size) {
            Word w(1 + uniform_below(rng, max_length), 'a');
            for (auto& c : w) c = letters[uniform_below(rng, letters.size())];
            words.insert(std::move(w));
        }
        FiniteLanguage candidate(alphabet, std::move(words));
        if (is_code(candidate)) return candidate;
    }
    throw contract_violation("no code found within the rejection-sampling budget");
}

/// Alt-induced instance: the product of two random prefix codes, with
/// |X|.|Y| = size and each factor at most half the length budget.
inline GeneratedInstance random_alt_induced(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t size,
                                            std::size_t max_length) {
    if (max_length < 2) throw contract_violation("alt-induced instances need max length >= 2");
    const std::size_t x_len = max_length / 2;
    const std::size_t y_len = max_length - x_len;
    std::vector<std::pair<std::size_t, std::size_t>> shapes, fallback;
    for (std::size_t p = 1; p <= size; ++p) {
        if (size % p != 0) continue;
        const std::size_t q = size / p;
        if (detail::capped_power(alphabet.size(), x_len, p) < p || detail::capped_power(alphabet.size(), y_len, q) < q)
            continue;
        (p >= 2 && q >= 2 ? shapes : fallback).emplace_back(p, q);
    }
    if (shapes.empty()) shapes = fallback;
    if (shapes.empty()) throw contract_violation("alt-induced parameters are infeasible");
    const auto [p, q] = shapes[uniform_below(rng, shapes.size())];
    FiniteLanguage x = random_prefix_code(rng, alphabet, p, x_len);
    FiniteLanguage y = random_prefix_code(rng, alphabet, q, y_len);
    return {product(x, y), Decomposition{std::move(x), std::move(y)}};
}

/// Standard-form alt-induced code over {a, b} whose two first-letter blocks
/// both have `block_size` words: {aab, bba}.Y for a random prefix code Y
/// using both final letters. The FIC search has to exhaust the pools of the
/// prefixes a and aa before reaching the planted Y.
inline GeneratedInstance planted_hard(std::mt19937_64& rng, std::size_t block_size, std::size_t max_length) {
    if (block_size < 2) throw contract_violation("hard instances need block size >= 2");
    const Alphabet ab{'a', 'b'};
    std::size_t y_len = 1;
    while ((std::size_t{1} << y_len) < 2 * block_size) ++y_len;
    y_len = std::max(y_len, max_length);
    const FiniteLanguage x(ab, {"aab", "bba"});
    for (;;) {
        FiniteLanguage y = random_prefix_code(rng, ab, block_size, y_len);
        bool ends_a = false, ends_b = false;
        for (const auto& w : y) (w.back() == 'a' ? ends_a : ends_b) = true;
        if (ends_a && ends_b) return {product(x, y), Decomposition{x, std::move(y)}};
    }
}

inline GeneratedInstance gen_instance(const GenParams& params) {
    std::mt19937_64 rng(params.seed);
    if (params.kind == GenKind::PlantedHard) return planted_hard(rng, params.size, params.max_length);
    const Alphabet alphabet = first_letters(params.alphabet_size);
    switch (params.kind) {
        case GenKind::Prefix: return {random_prefix_code(rng, alphabet, params.size, params.max_length), {}};
        case GenKind::MaximalPrefix:
            return {random_maximal_prefix_code(rng, alphabet, params.size, params.max_length), {}};
        case GenKind::AltInduced: return random_alt_induced(rng, alphabet, params.size, params.max_length);
        case GenKind::RandomCode: return {random_code(rng, alphabet, params.size, params.max_length), {}};
        case GenKind::PlantedHard: break;
    }
    throw contract_violation("unknown generator kind");
}

}  // namespace altcodes
