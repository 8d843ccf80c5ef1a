#pragma once

#include <stdexcept>
#include <string>

namespace eo {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A variable, slot or vertex index outside its valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

// An operation was called on an argument that violates its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured size cap or recursion budget was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An internal invariant failed. Always a bug, never a user error.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace eo
