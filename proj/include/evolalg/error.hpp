#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evolalg {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes or lengths that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Basis index outside [0, n).
class IndexError : public Error {
public:
    using Error::Error;
};

// Operands living over different fields, or arithmetic undefined in the field.
class FieldError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates a semantic rule (non-prime modulus, empty algebra, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration refused because the instance is larger than the budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A computed result failed its own consistency check. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace evolalg
