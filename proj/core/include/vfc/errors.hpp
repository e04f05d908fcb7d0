#pragma once

#include <stdexcept>
#include <string>

namespace vfc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (wrong field, wrong sort, bad flag, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// Inversion of zero in a field.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// The question cannot be settled at the precision the operands carry.
// Callers are expected to refine precision and retry, up to a cap.
struct NeedsPrecision : Error {
    using Error::Error;
};

// The Hensel margin v(f(a0)) > 2 v(f'(a0)) fails with exactly known valuations.
struct NotHenselian : Error {
    using Error::Error;
};

// Syntax or sort error with a source position (1-based).
struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

}  // namespace vfc
