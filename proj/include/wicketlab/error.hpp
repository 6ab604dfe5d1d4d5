#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wicketlab {

/// Malformed input text. Carries the 1-based line number where parsing stopped
/// (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An object failed the property it was required to have (AP3-freeness,
/// wicket-freeness of a selected colour class, ...).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A randomized procedure ran out of its iteration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wicketlab
