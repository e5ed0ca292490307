#pragma once

// Deciding whether a finite code Z is induced by an alternative code, i.e.
// Z = XY with (X, Y) an alternative code.
//
// decide_alt_induced runs the full pipeline: code check, the cheap
// reductions for codes that are not in standard form, the gcd obstruction on
// first-letter block sizes, and finally the FIC prefix-pool search
//
//   w   a shortest word of Z, t its first letter
//   u   ranges over the non-empty proper prefixes of w, shortest first
//   Y   ranges over subsets of S = u^-1 Z_t whose size is a common divisor
//       (>= 2) of the block sizes
//   X   ranges over subsets of P = ∩_{y in Y} Z y^-1 of size |Z| / |Y|
//
// stopping at the first (X, Y) with XY = Z.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "altcodes/alt_code.hpp"
#include "altcodes/budget.hpp"
#include "altcodes/code_check.hpp"
#include "altcodes/combinations.hpp"
#include "altcodes/errors.hpp"
#include "altcodes/language.hpp"

namespace altcodes {

enum class StandardFormKind { Standard, HasLength1, OneLetterAlphabet, CommonFirst, CommonLast };

struct StandardForm {
    StandardFormKind kind = StandardFormKind::Standard;
    /// The shared letter for CommonFirst / CommonLast / OneLetterAlphabet.
    std::optional<Letter> letter;

    friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

inline const char* to_string(StandardFormKind k) {
    switch (k) {
        case StandardFormKind::Standard: return "Standard";
        case StandardFormKind::HasLength1: return "HasLength1";
        case StandardFormKind::OneLetterAlphabet: return "OneLetterAlphabet";
        case StandardFormKind::CommonFirst: return "CommonFirst";
        case StandardFormKind::CommonLast: return "CommonLast";
    }
    return "?";
}

/// Labels are tried in the order HasLength1, OneLetterAlphabet,
/// CommonFirst, CommonLast. Only letters that occur in z count.
inline StandardForm classify_standard_form(const FiniteLanguage& z) {
    detail::require_nonempty_proper(z, "classify_standard_form");
    if (z.min_length() < 2) return {StandardFormKind::HasLength1, std::nullopt};

    std::set<Letter> letters, firsts, lasts;
    for (const auto& w : z) {
        letters.insert(w.begin(), w.end());
        firsts.insert(w.front());
        lasts.insert(w.back());
    }
    if (letters.size() == 1) return {StandardFormKind::OneLetterAlphabet, *letters.begin()};
    if (firsts.size() == 1) return {StandardFormKind::CommonFirst, *firsts.begin()};
    if (lasts.size() == 1) return {StandardFormKind::CommonLast, *lasts.begin()};
    return {StandardFormKind::Standard, std::nullopt};
}

struct GcdPretest {
    bool reject = false;
    std::size_t gcd = 0;
    std::map<Letter, std::size_t> block_sizes;
    /// Common divisors >= 2 of the block sizes, ascending. Empty on reject.
    std::vector<std::size_t> d_set;
};

/// Divisors of n that are >= lowest, ascending.
inline std::vector<std::size_t> divisors(std::size_t n, std::size_t lowest = 1) {
    std::vector<std::size_t> out;
    for (std::size_t d = std::max<std::size_t>(lowest, 1); d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// gcd of the non-empty first-letter block sizes. A gcd of 1 rules out
/// every factorization Z = XY with |X|, |Y| >= 2.
inline GcdPretest gcd_pretest(const FiniteLanguage& z) {
    detail::require_nonempty_proper(z, "gcd_pretest");
    GcdPretest r;
    r.block_sizes = partition_by_first_letter(z).block_sizes();
    for (const auto& [letter, size] : r.block_sizes) r.gcd = std::gcd(r.gcd, size);
    r.reject = r.gcd == 1;
    if (!r.reject) r.d_set = divisors(r.gcd, 2);
    return r;
}

struct SearchStats {
    std::uint64_t u_tried = 0;
    std::uint64_t y_tried = 0;
    std::uint64_t x_tried = 0;

    std::uint64_t candidates() const noexcept { return y_tried + x_tried; }
};

/// One Y examined for a given u, with its pool P and the number of X tried.
struct FicCandidate {
    FiniteLanguage y;
    FiniteLanguage p;
    std::uint64_t x_tried = 0;
};

/// The work done for one prefix u of w.
struct FicPrefixStep {
    Word u;
    FiniteLanguage s;
    std::uint64_t y_tried = 0;
    std::uint64_t x_tried = 0;
    /// Filled only when candidate recording is requested.
    std::vector<FicCandidate> candidates;
};

struct FicSearchState {
    Word w;
    Letter t = 0;
    std::vector<Word> p_w;
    std::vector<std::size_t> d_set;
    std::vector<FicPrefixStep> steps;
    SearchStats stats;
};

struct FicOptions {
    SearchBudget budget;
    bool record_candidates = false;
};

struct FicResult {
    std::optional<Decomposition> decomposition;
    FicSearchState state;
};

namespace detail {

/// XY = Z given |X|.|Y| = |Z|: every product lands in Z and none collide.
inline bool covers_exactly(const FiniteLanguage& z, const std::vector<Word>& x, const FiniteLanguage& y) {
    std::set<Word, ShortLex> seen;
    for (const auto& a : x)
        for (const auto& b : y) {
            Word ab = a + b;
            if (!z.contains(ab) || !seen.insert(std::move(ab)).second) return false;
        }
    return seen.size() == z.size();
}

/// The prefix-pool search shared by fic_search and
/// enumerate_decompositions. `y_sizes` lists admissible |Y| in the order to
/// try them. `on_found` returns true to stop the search.
template <class OnFound>
void prefix_pool_search(const FiniteLanguage& z, const std::vector<std::size_t>& y_sizes, FicSearchState& state,
                        BudgetGuard& guard, bool record_candidates, OnFound&& on_found) {
    const auto partition = partition_by_first_letter(z);
    state.w = *z.begin();
    state.t = state.w.front();
    state.p_w.clear();
    for (std::size_t n = 1; n < state.w.size(); ++n) state.p_w.push_back(state.w.substr(0, n));
    const FiniteLanguage& block = partition.block(state.t);

    for (const Word& u : state.p_w) {
        ++state.stats.u_tried;
        FicPrefixStep step{u, left_quotient(u, block), 0, 0, {}};
        const std::vector<Word> s = step.s.to_vector();
        bool stop = false;

        for (std::size_t y_size : y_sizes) {
            for (CombinationCursor yc(s.size(), y_size); yc.valid() && !stop; yc.next()) {
                guard.charge();
                ++state.stats.y_tried;
                ++step.y_tried;
                const std::vector<Word> chosen = select(s, yc.indices());
                const FiniteLanguage y = z.derive({chosen.begin(), chosen.end()});
                FiniteLanguage p = without_empty_word(right_quotient(z, *y.begin()));
                for (auto it = std::next(y.begin()); it != y.end() && !p.empty(); ++it)
                    p = intersect(p, right_quotient(z, *it));
                p = without_empty_word(p);

                FicCandidate cand{y, p, 0};
                const std::size_t x_size = z.size() / y_size;
                const std::vector<Word> pool = p.to_vector();
                for (CombinationCursor xc(pool.size(), x_size); xc.valid(); xc.next()) {
                    guard.charge();
                    ++state.stats.x_tried;
                    ++step.x_tried;
                    ++cand.x_tried;
                    std::vector<Word> x = select(pool, xc.indices());
                    if (covers_exactly(z, x, y) &&
                        on_found(Decomposition{z.derive({x.begin(), x.end()}), y})) {
                        stop = true;
                        break;
                    }
                }
                if (record_candidates) step.candidates.push_back(std::move(cand));
            }
            if (stop) break;
        }
        state.steps.push_back(std::move(step));
        if (stop) return;
    }
}

}  // namespace detail

/// Algorithm FIC, steps 2-3: the first decomposition in canonical order
/// (u by length, Y by size descending then lexicographically, X
/// lexicographically), or none.
inline FicResult fic_search(const FiniteLanguage& z, const std::vector<std::size_t>& d_set,
                            const FicOptions& options = {}) {
    detail::require_nonempty_proper(z, "fic_search");
    if (classify_standard_form(z).kind != StandardFormKind::Standard)
        throw contract_violation("fic_search: input is not in standard form");
    if (d_set.empty() || std::any_of(d_set.begin(), d_set.end(), [](std::size_t d) { return d < 2; }))
        throw contract_violation("fic_search: divisor set must be non-empty with entries >= 2");
    for (const auto& [letter, size] : partition_by_first_letter(z).block_sizes())
        for (std::size_t d : d_set)
            if (size % d != 0) throw contract_violation("fic_search: divisor set does not divide the block sizes");

    FicResult result;
    result.state.d_set = d_set;
    std::vector<std::size_t> sizes = d_set;
    std::sort(sizes.rbegin(), sizes.rend());
    BudgetGuard guard(options.budget);
    detail::prefix_pool_search(z, sizes, result.state, guard, options.record_candidates,
                               [&](Decomposition d) {
                                   result.decomposition = std::move(d);
                                   return true;
                               });
    return result;
}

enum class Verdict { AltInduced, NotAltInduced };

enum class Route {
    Length1Reject,
    OneLetterAlphabet,
    CommonFirstLetter,
    CommonLastLetter,
    GcdReject,
    PrimeReject,
    FicFound,
    FicExhausted
};

inline const char* to_string(Verdict v) { return v == Verdict::AltInduced ? "AltInduced" : "NotAltInduced"; }

inline const char* to_string(Route r) {
    switch (r) {
        case Route::Length1Reject: return "Length1Reject";
        case Route::OneLetterAlphabet: return "OneLetterAlphabet";
        case Route::CommonFirstLetter: return "CommonFirstLetter";
        case Route::CommonLastLetter: return "CommonLastLetter";
        case Route::GcdReject: return "GcdReject";
        case Route::PrimeReject: return "PrimeReject";
        case Route::FicFound: return "FicFound";
        case Route::FicExhausted: return "FicExhausted";
    }
    return "?";
}

struct DecisionReport {
    Verdict verdict = Verdict::NotAltInduced;
    Route route = Route::FicExhausted;
    std::optional<Decomposition> decomposition;
    SearchStats search_stats;
    StandardForm form;
    /// Present for standard-form inputs.
    std::optional<GcdPretest> gcd;
    /// Present when the FIC search ran.
    std::optional<FicSearchState> search;
};

struct DecideOptions {
    SearchBudget budget;
    bool record_candidates = false;
};

/// Total decision for a finite code. Throws not_a_code (carrying a witness)
/// when z is not a code, contract_violation on empty input or ε, and
/// budget_exceeded when the search gives up.
inline DecisionReport decide_alt_induced(const FiniteLanguage& z, const DecideOptions& options = {}) {
    detail::require_nonempty_proper(z, "decide_alt_induced");
    if (!is_code(z)) throw not_a_code(ambiguity_witness(z));

    DecisionReport report;
    report.form = classify_standard_form(z);
    auto accept = [&](Route route, Decomposition d) {
        if (!is_valid_decomposition(d, z))
            throw std::logic_error("decide_alt_induced: produced an invalid decomposition");
        report.verdict = Verdict::AltInduced;
        report.route = route;
        report.decomposition = std::move(d);
    };

    switch (report.form.kind) {
        case StandardFormKind::HasLength1:
            report.verdict = Verdict::NotAltInduced;
            report.route = Route::Length1Reject;
            return report;
        case StandardFormKind::OneLetterAlphabet:
        case StandardFormKind::CommonFirst: {
            const Word first(1, *report.form.letter);
            accept(report.form.kind == StandardFormKind::CommonFirst ? Route::CommonFirstLetter
                                                                     : Route::OneLetterAlphabet,
                   {z.derive({first}), left_quotient(first, z)});
            return report;
        }
        case StandardFormKind::CommonLast: {
            const Word last(1, *report.form.letter);
            accept(Route::CommonLastLetter, {right_quotient(z, last), z.derive({last})});
            return report;
        }
        case StandardFormKind::Standard: break;
    }

    report.gcd = gcd_pretest(z);
    if (report.gcd->reject) {
        report.verdict = Verdict::NotAltInduced;
        report.route = is_prime(z.size()) ? Route::PrimeReject : Route::GcdReject;
        return report;
    }

    FicResult fic = fic_search(z, report.gcd->d_set, {options.budget, options.record_candidates});
    report.search_stats = fic.state.stats;
    report.search = std::move(fic.state);
    if (fic.decomposition) {
        accept(Route::FicFound, std::move(*fic.decomposition));
    } else {
        report.verdict = Verdict::NotAltInduced;
        report.route = Route::FicExhausted;
    }
    return report;
}

/// Every (X, Y) with XY = Z and |X|.|Y| = |Z|, in canonical order.
///
/// The same prefix-pool search as FIC without first-found termination,
/// widened to |Y| = 1 and to codes not in standard form: |Y| ranges over all
/// common divisors of the block sizes, and any valid pair is reached through
/// the prefix u = x of the shortest word w = xy.
inline std::vector<Decomposition> enumerate_decompositions(const FiniteLanguage& z, const SearchBudget& budget = {}) {
    detail::require_nonempty_proper(z, "enumerate_decompositions");
    if (z.min_length() < 2) throw contract_violation("enumerate_decompositions: words of length 1 present");
    if (!is_code(z)) throw not_a_code(ambiguity_witness(z));

    std::size_t g = 0;
    for (const auto& [letter, size] : partition_by_first_letter(z).block_sizes()) g = std::gcd(g, size);
    std::vector<std::size_t> sizes = divisors(g);
    std::sort(sizes.rbegin(), sizes.rend());

    auto less = [](const Decomposition& a, const Decomposition& b) { return canonical_less(a, b); };
    std::set<Decomposition, decltype(less)> found(less);
    FicSearchState state;
    BudgetGuard guard(budget);
    detail::prefix_pool_search(z, sizes, state, guard, false, [&](Decomposition d) {
        found.insert(std::move(d));
        return false;
    });
    return {found.begin(), found.end()};
}

/// Decompositions whose pair is a strong alternative code. Always finite.
inline std::vector<Decomposition> enumerate_strong_decompositions(const FiniteLanguage& z,
                                                                  const SearchBudget& budget = {}) {
    std::vector<Decomposition> out;
    for (auto& d : enumerate_decompositions(z, budget))
        if (check_strong(d.x, d.y).is_strong) out.push_back(std::move(d));
    return out;
}

}  // namespace altcodes
