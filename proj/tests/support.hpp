#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "altcodes/generate.hpp"
#include "altcodes/language.hpp"

namespace testing_support {

using altcodes::FiniteLanguage;

/// A uniformly random word of length 1..max_len over `letters`.
inline std::string random_word(std::mt19937_64& rng, const std::string& letters, std::size_t max_len) {
    std::string w(1 + altcodes::uniform_below(rng, max_len), 'a');
    for (auto& c : w) c = letters[altcodes::uniform_below(rng, letters.size())];
    return w;
}

/// Up to `max_size` distinct random non-empty words (at least one).
inline FiniteLanguage random_language(std::mt19937_64& rng, const std::string& letters, std::size_t max_size,
                                      std::size_t max_len) {
    FiniteLanguage::container_type words;
    const std::size_t target = 1 + altcodes::uniform_below(rng, max_size);
    for (std::size_t i = 0; i < 4 * target && words.size() < target; ++i) words.insert(random_word(rng, letters, max_len));
    return FiniteLanguage(std::move(words));
}

inline altcodes::Alphabet letters_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace testing_support
