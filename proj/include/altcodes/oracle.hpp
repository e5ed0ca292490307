#pragma once

// Brute-force ground truth for small instances. Shares nothing with the
// FIC search or the Sardinas-Patterson test beyond the language primitives.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altcodes/alt_code.hpp"
#include "altcodes/code_check.hpp"
#include "altcodes/errors.hpp"
#include "altcodes/language.hpp"

namespace altcodes {

struct OracleBudget {
    std::size_t max_words = 16;
    std::size_t max_word_length = 8;
    std::size_t max_suffixes = 24;
    std::uint64_t max_steps = 100'000'000;
};

struct OracleResult {
    std::vector<Decomposition> decompositions;
    bool is_code = false;
    std::optional<AmbiguityWitness> witness;
};

/// Looks for a word of length <= max_len with two factorizations over z by
/// growing pairs of factor sequences that start with different words,
/// always extending the shorter side, shortest total length first. Returns
/// (true, none) when no such word exists within the bound.
inline std::pair<bool, std::optional<AmbiguityWitness>> naive_code_check(const FiniteLanguage& z,
                                                                         std::size_t max_len) {
    if (z.contains_empty_word()) throw contract_violation("naive_code_check: language contains the empty word");

    struct Pair {
        std::vector<Word> a, b;
        Word text_a, text_b;
        std::size_t length() const { return std::max(text_a.size(), text_b.size()); }
    };
    // Buckets indexed by the longer side's length give a breadth-first
    // order by word length.
    std::vector<std::deque<Pair>> buckets(max_len + 1);
    for (const auto& x : z)
        for (const auto& y : z)
            if (x != y && std::string_view(y).starts_with(x) && y.size() <= max_len)
                buckets[y.size()].push_back({{x}, {y}, x, y});

    for (std::size_t len = 0; len <= max_len; ++len) {
        while (!buckets[len].empty()) {
            Pair p = std::move(buckets[len].front());
            buckets[len].pop_front();
            if (p.text_a == p.text_b) return {false, AmbiguityWitness{p.text_a, p.a, p.b}};
            const bool a_behind = p.text_a.size() < p.text_b.size();
            for (const auto& w : z) {
                Pair next = p;
                auto& seq = a_behind ? next.a : next.b;
                auto& text = a_behind ? next.text_a : next.text_b;
                const auto& other = a_behind ? next.text_b : next.text_a;
                seq.push_back(w);
                text += w;
                const bool consistent = text.size() <= other.size() ? std::string_view(other).starts_with(text)
                                                                    : std::string_view(text).starts_with(other);
                if (consistent && next.length() <= max_len) buckets[next.length()].push_back(std::move(next));
            }
        }
    }
    return {true, std::nullopt};
}

/// Bound used by the oracle: twice the sum of the two longest word lengths.
inline std::size_t naive_code_check_bound(const FiniteLanguage& z) {
    std::vector<std::size_t> lengths;
    for (const auto& w : z) lengths.push_back(w.size());
    std::sort(lengths.rbegin(), lengths.rend());
    std::size_t sum = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(2, lengths.size()); ++i) sum += lengths[i];
    return 2 * sum;
}

/// Every (X, Y) with XY = Z and |X|.|Y| = |Z|.
///
/// Y ranges over all subsets of Suff(Z) \ {ε} whose size divides |Z|; X
/// ranges over the subsets of P = ∩_{y in Y} Z y^-1 \ {ε} of size |Z|/|Y|.
/// Any decomposition has Y among the proper suffixes and X inside P, so
/// the search is complete. Branches are cut as soon as P is too small to
/// hold X, which never discards a solution.
inline OracleResult brute_force_decompositions(const FiniteLanguage& z, const OracleBudget& budget = {}) {
    if (z.empty()) throw contract_violation("brute_force_decompositions: empty language");
    if (z.min_length() < 2) throw contract_violation("brute_force_decompositions: words shorter than 2 present");
    const std::vector<Word> suffixes = without_empty_word(proper_suffixes(z)).to_vector();
    if (z.size() > budget.max_words || z.max_length() > budget.max_word_length ||
        suffixes.size() > budget.max_suffixes)
        throw budget_exceeded("brute_force_decompositions: instance exceeds the oracle budget");

    OracleResult result;
    auto [code, witness] = naive_code_check(z, naive_code_check_bound(z));
    result.is_code = code;
    result.witness = std::move(witness);

    std::uint64_t steps = 0;
    auto step = [&] {
        if (++steps > budget.max_steps) throw budget_exceeded("brute_force_decompositions: step budget exceeded");
    };

    std::vector<Word> chosen_y;
    std::vector<Word> chosen_x;

    auto try_x = [&](auto&& self, const std::vector<Word>& pool, std::size_t from, std::size_t need) -> void {
        if (need == 0) {
            step();
            const FiniteLanguage x = z.derive({chosen_x.begin(), chosen_x.end()});
            const FiniteLanguage y = z.derive({chosen_y.begin(), chosen_y.end()});
            if (product(x, y) == z) result.decompositions.push_back({x, y});
            return;
        }
        for (std::size_t i = from; i + need <= pool.size(); ++i) {
            chosen_x.push_back(pool[i]);
            self(self, pool, i + 1, need - 1);
            chosen_x.pop_back();
        }
    };

    auto try_y = [&](auto&& self, std::size_t from, std::size_t need, std::size_t x_size,
                     const FiniteLanguage& pool) -> void {
        step();
        if (pool.size() < x_size) return;
        if (need == 0) {
            try_x(try_x, pool.to_vector(), 0, x_size);
            return;
        }
        for (std::size_t i = from; i + need <= suffixes.size(); ++i) {
            FiniteLanguage narrowed = without_empty_word(right_quotient(z, suffixes[i]));
            if (!chosen_y.empty()) narrowed = intersect(narrowed, pool);
            chosen_y.push_back(suffixes[i]);
            self(self, i + 1, need - 1, x_size, narrowed);
            chosen_y.pop_back();
        }
    };

    const FiniteLanguage everything = without_empty_word(proper_prefixes(z));
    for (std::size_t y_size = 1; y_size <= z.size(); ++y_size)
        if (z.size() % y_size == 0) try_y(try_y, 0, y_size, z.size() / y_size, everything);

    std::sort(result.decompositions.begin(), result.decompositions.end(),
              [](const Decomposition& a, const Decomposition& b) { return canonical_less(a, b); });
    return result;
}

}  // namespace altcodes
