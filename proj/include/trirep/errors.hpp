#ifndef TRIREP_ERRORS_HPP
#define TRIREP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trirep {

/// A configured enumeration or size budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; the message carries the 1-based line number.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A construction failed its own post-condition check.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace trirep

#endif
