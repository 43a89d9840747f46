#pragma once

#include <stdexcept>
#include <string>

namespace wedgecert {

// Invalid argument shape (non-square matrix, mismatched lengths).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of the operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A stated precondition does not hold for the given input.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Search exceeded its configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A certified identity failed to hold.  Must never fire; reserved for
// exit status 2 in the CLI.
class InternalFault : public std::logic_error {
public:
    explicit InternalFault(const std::string& what) : std::logic_error(what) {}
};

} // namespace wedgecert
