#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altcodes {

// Caller broke an operation's precondition (empty word in a code, empty
// language, mismatched alphabets, ...).
class contract_violation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class alphabet_mismatch : public contract_violation {
public:
    using contract_violation::contract_violation;
};

// An exhaustive search ran out of its candidate or wall-clock budget.
// Never converted into a verdict.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed language file. Line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace altcodes
