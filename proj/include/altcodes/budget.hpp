#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "altcodes/errors.hpp"

namespace altcodes {

struct SearchBudget {
    /// Candidate sets (Y and X) examined before giving up.
    std::uint64_t max_candidates = 100'000'000;
    std::optional<std::chrono::milliseconds> timeout;
};

/// Charges candidates against a SearchBudget; throws budget_exceeded.
class BudgetGuard {
public:
    explicit BudgetGuard(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void charge() {
        if (++spent_ > budget_.max_candidates)
            throw budget_exceeded("search budget of " + std::to_string(budget_.max_candidates) +
                                  " candidates exceeded");
        if (budget_.timeout && (spent_ & 0x3ff) == 0) check_clock();
    }

    void check_clock() const {
        if (budget_.timeout && std::chrono::steady_clock::now() - start_ > *budget_.timeout)
            throw budget_exceeded("search timeout of " + std::to_string(budget_.timeout->count()) +
                                  " ms exceeded");
    }

    std::uint64_t spent() const noexcept { return spent_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t spent_ = 0;
};

}  // namespace altcodes
