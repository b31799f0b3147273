#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clonoid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed truth-table text; `position` is the 0-based offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A job whose estimated cost exceeds the configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t estimate, std::uint64_t budget,
                   const std::string& suggestion = {})
        : Error(what + ": estimated cost " + std::to_string(estimate) + " exceeds budget " +
                std::to_string(budget) + (suggestion.empty() ? "" : "; " + suggestion)),
          estimate_(estimate), budget_(budget) {}
    std::uint64_t estimate() const noexcept { return estimate_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t estimate_;
    std::uint64_t budget_;
};

} // namespace clonoid
