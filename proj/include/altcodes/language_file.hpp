#pragma once

// Plain-text language files.
//
//   #alphabet abc      optional, first line only: declared letters
//   # anything         comment
//   abbab              one word per line
//
// Trailing whitespace is stripped, blank lines are ignored, and a repeated
// word is kept once with a warning. Without a header the alphabet is the
// set of letters that occur.

#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "altcodes/errors.hpp"
#include "altcodes/language.hpp"

namespace altcodes {

struct ParsedLanguage {
    FiniteLanguage language;
    std::vector<std::string> warnings;
};

inline ParsedLanguage parse_language(std::istream& in) {
    constexpr std::string_view header = "#alphabet";
    ParsedLanguage out;
    bool declared = false;
    Alphabet alphabet;
    FiniteLanguage::container_type words;
    std::string line;
    std::size_t number = 0;

    while (std::getline(in, line)) {
        ++number;
        if (number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r' ||
                                 line.back() == '\n' || line.back() == '\v' || line.back() == '\f'))
            line.pop_back();
        if (line.empty()) continue;

        if (line.front() == '#') {
            const bool is_header = number == 1 && line.starts_with(header) &&
                                   (line.size() == header.size() || line[header.size()] == ' ');
            if (!is_header) continue;
            std::string_view letters = std::string_view(line).substr(header.size());
            while (!letters.empty() && letters.front() == ' ') letters.remove_prefix(1);
            if (letters.empty()) throw parse_error(number, "#alphabet declares no letters");
            for (char c : letters) {
                if (!is_valid_letter(c)) throw parse_error(number, "invalid letter in #alphabet");
                if (!alphabet.insert(c).second)
                    throw parse_error(number, std::string("letter '") + c + "' declared twice");
            }
            declared = true;
            continue;
        }

        for (char c : line) {
            if (!is_valid_letter(c)) throw parse_error(number, "invalid character in word '" + line + "'");
            if (declared && !alphabet.contains(c))
                throw parse_error(number, std::string("letter '") + c + "' is not in the declared alphabet");
        }
        if (!words.insert(line).second)
            out.warnings.push_back("line " + std::to_string(number) + ": duplicate word '" + line + "' ignored");
    }

    out.language = declared ? FiniteLanguage(std::move(alphabet), std::move(words)) : FiniteLanguage(std::move(words));
    return out;
}

inline ParsedLanguage parse_language(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_language(in);
}

inline ParsedLanguage load_language_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    return parse_language(in);
}

/// Inverse of parse_language: the header when the alphabet is declared,
/// then the words in short-lex order.
inline std::string render_language(const FiniteLanguage& x) {
    if (x.contains_empty_word()) throw contract_violation("render_language: the empty word has no file form");
    std::string out;
    if (x.alphabet_declared()) {
        out += "#alphabet ";
        out.append(x.alphabet().begin(), x.alphabet().end());
        out += '\n';
    }
    for (const auto& w : x) {
        out += w;
        out += '\n';
    }
    return out;
}

}  // namespace altcodes
