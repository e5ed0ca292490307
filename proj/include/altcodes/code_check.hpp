#pragma once

// Unique decipherability and the prefix/suffix/bifix code classes.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "altcodes/errors.hpp"
#include "altcodes/language.hpp"

namespace altcodes {

enum class CodeVerdict { Code, NotCode };
enum class SpHalt { EmptySetReached, CycleDetected, EpsilonFound };

inline const char* to_string(CodeVerdict v) { return v == CodeVerdict::Code ? "Code" : "NotCode"; }

inline const char* to_string(SpHalt h) {
    switch (h) {
        case SpHalt::EmptySetReached: return "EmptySetReached";
        case SpHalt::CycleDetected: return "CycleDetected";
        case SpHalt::EpsilonFound: return "EpsilonFound";
    }
    return "?";
}

/// The Sardinas-Patterson remainder sets U_1, U_2, ... up to the halting step.
struct SpTrace {
    std::vector<FiniteLanguage> u_sets;
    CodeVerdict verdict = CodeVerdict::Code;
    SpHalt halting_reason = SpHalt::EmptySetReached;

    bool is_code() const noexcept { return verdict == CodeVerdict::Code; }
};

/// A word with two different factorizations over X.
struct AmbiguityWitness {
    Word word;
    std::vector<Word> factorization_a;
    std::vector<Word> factorization_b;

    friend bool operator==(const AmbiguityWitness&, const AmbiguityWitness&) = default;
};

inline Word concatenate(const std::vector<Word>& factors) {
    Word out;
    for (const auto& f : factors) out += f;
    return out;
}

/// Both factorizations use words of x, spell `word`, and differ.
inline bool is_valid_witness(const AmbiguityWitness& w, const FiniteLanguage& x) {
    auto in_x = [&](const Word& f) { return x.contains(f); };
    return std::all_of(w.factorization_a.begin(), w.factorization_a.end(), in_x) &&
           std::all_of(w.factorization_b.begin(), w.factorization_b.end(), in_x) &&
           !w.factorization_a.empty() && !w.factorization_b.empty() &&
           concatenate(w.factorization_a) == w.word && concatenate(w.factorization_b) == w.word &&
           w.factorization_a != w.factorization_b;
}

class not_a_code : public contract_violation {
public:
    explicit not_a_code(AmbiguityWitness witness)
        : contract_violation("input is not a code: '" + witness.word + "' has two factorizations"),
          witness_(std::move(witness)) {}

    const AmbiguityWitness& witness() const noexcept { return witness_; }

private:
    AmbiguityWitness witness_;
};

namespace detail {

inline void require_nonempty_proper(const FiniteLanguage& x, const char* op) {
    if (x.empty()) throw contract_violation(std::string(op) + ": empty language");
    if (x.contains_empty_word()) throw contract_violation(std::string(op) + ": language contains the empty word");
}

}  // namespace detail

/// Runs the Sardinas-Patterson recurrence
///   U_1 = X^-1 X \ {ε},  U_(n+1) = X^-1 U_n ∪ U_n^-1 X
/// until some U_n contains ε (not a code), is empty, or repeats an earlier
/// set. Every U_n is a set of suffixes of words of X, so the last case
/// always occurs eventually.
inline SpTrace sardinas_patterson(const FiniteLanguage& x) {
    detail::require_nonempty_proper(x, "sardinas_patterson");
    SpTrace trace;
    std::set<FiniteLanguage::container_type> seen;
    FiniteLanguage current = without_empty_word(left_quotient(x, x));
    for (;;) {
        trace.u_sets.push_back(current);
        if (current.contains_empty_word()) {
            trace.verdict = CodeVerdict::NotCode;
            trace.halting_reason = SpHalt::EpsilonFound;
            return trace;
        }
        if (current.empty()) {
            trace.halting_reason = SpHalt::EmptySetReached;
            return trace;
        }
        if (!seen.insert(current.words()).second) {
            trace.halting_reason = SpHalt::CycleDetected;
            return trace;
        }
        current = unite(left_quotient(x, current), left_quotient(current, x));
    }
}

inline bool is_code(const FiniteLanguage& x) { return sardinas_patterson(x).is_code(); }

/// Shortest word with two distinct factorizations over x.
///
/// Searches the "pending remainder" graph directly: a state is the dangling
/// suffix by which one partial factorization runs ahead of the other. Edge
/// weights are the growth of the leading side, so a Dijkstra order yields a
/// witness of minimum length. Throws contract_violation if x is a code.
inline AmbiguityWitness ambiguity_witness(const FiniteLanguage& x) {
    detail::require_nonempty_proper(x, "ambiguity_witness");

    struct Node {
        std::size_t cost;  // length of the leading side
        Word remainder;
        std::vector<Word> lead;
        std::vector<Word> lag;
    };
    auto later = [](const Node& a, const Node& b) {
        return std::tie(a.cost, a.remainder, a.lead, a.lag) > std::tie(b.cost, b.remainder, b.lead, b.lag);
    };
    std::priority_queue<Node, std::vector<Node>, decltype(later)> queue(later);

    for (const auto& shorter : x)
        for (const auto& longer : x)
            if (longer.size() > shorter.size() && std::string_view(longer).starts_with(shorter))
                queue.push({longer.size(), longer.substr(shorter.size()), {longer}, {shorter}});

    std::set<Word> settled;
    while (!queue.empty()) {
        Node node = queue.top();
        queue.pop();
        if (node.remainder.empty()) return {concatenate(node.lead), std::move(node.lead), std::move(node.lag)};
        if (!settled.insert(node.remainder).second) continue;
        for (const auto& z : x) {
            std::vector<Word> lag = node.lag;
            lag.push_back(z);
            if (z == node.remainder) {
                queue.push({node.cost, Word{}, node.lead, std::move(lag)});
            } else if (std::string_view(z).starts_with(node.remainder)) {
                queue.push({node.cost + z.size() - node.remainder.size(), z.substr(node.remainder.size()),
                            std::move(lag), node.lead});
            } else if (std::string_view(node.remainder).starts_with(z)) {
                queue.push({node.cost, node.remainder.substr(z.size()), node.lead, std::move(lag)});
            }
        }
    }
    throw contract_violation("ambiguity_witness: language is a code");
}

// ---------------------------------------------------------------------------
// Prefix / suffix / bifix classes
// ---------------------------------------------------------------------------

/// No word of x is a proper prefix of another.
inline bool is_prefix_code(const FiniteLanguage& x) {
    detail::require_nonempty_proper(x, "is_prefix_code");
    // In lexicographic order a word's extensions follow it immediately.
    std::vector<Word> sorted = x.to_vector();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (std::string_view(sorted[i + 1]).starts_with(sorted[i])) return false;
    return true;
}

inline bool is_suffix_code(const FiniteLanguage& x) { return is_prefix_code(reverse(x)); }

inline bool is_bifix_code(const FiniteLanguage& x) { return is_prefix_code(x) && is_suffix_code(x); }

/// A finite prefix code is maximal exactly when its Kraft sum is 1.
inline bool is_maximal_prefix(const FiniteLanguage& x) {
    if (!is_prefix_code(x)) throw contract_violation("is_maximal_prefix: not a prefix code");
    return kraft_sum(x) == Rational(1);
}

inline bool is_maximal_suffix(const FiniteLanguage& x) {
    if (!is_suffix_code(x)) throw contract_violation("is_maximal_suffix: not a suffix code");
    return is_maximal_prefix(reverse(x));
}

/// Finite sets are thin, so maximal bifix = maximal prefix and maximal suffix.
inline bool is_maximal_bifix(const FiniteLanguage& x) {
    if (!is_bifix_code(x)) throw contract_violation("is_maximal_bifix: not a bifix code");
    return is_maximal_prefix(x) && is_maximal_suffix(x);
}

/// Some word is not an infix of any word of x. For a finite x any word
/// longer than its longest word will do.
inline bool is_thin(const FiniteLanguage& x) {
    if (x.empty()) return true;
    const std::size_t longest = x.max_length();
    const Word probe(longest + 1, longest == 0 ? 'a' : x.words().rbegin()->front());
    return std::none_of(x.begin(), x.end(), [&](const Word& w) { return w.find(probe) != Word::npos; });
}

struct CodeClassReport {
    bool is_code = false;
    bool is_prefix = false;
    bool is_suffix = false;
    bool is_bifix = false;
    bool is_maximal_prefix = false;
    bool is_maximal_suffix = false;
    bool is_maximal_bifix = false;
    std::optional<AmbiguityWitness> witness;
};

inline CodeClassReport classify_code(const FiniteLanguage& x) {
    CodeClassReport r;
    r.is_code = is_code(x);
    if (!r.is_code) r.witness = ambiguity_witness(x);
    r.is_prefix = is_prefix_code(x);
    r.is_suffix = is_suffix_code(x);
    r.is_bifix = r.is_prefix && r.is_suffix;
    r.is_maximal_prefix = r.is_prefix && is_maximal_prefix(x);
    r.is_maximal_suffix = r.is_suffix && is_maximal_suffix(x);
    r.is_maximal_bifix = r.is_maximal_prefix && r.is_maximal_suffix;
    return r;
}

}  // namespace altcodes
