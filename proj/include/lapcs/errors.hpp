#pragma once

#include <stdexcept>
#include <string>

namespace lapcs {

// Base for every error raised by the library. Callers that only care about
// "something went wrong" can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value violates a type invariant (bad arc, malformed mapping, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Input text could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Semantically invalid input for an operation (loops, multi-edges, bad k).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Instance shape does not fit the operation (e.g. length mismatch).
class InstanceError : public Error {
public:
    using Error::Error;
};

// A specialised solver was called on an instance it does not handle.
class WrongSolverError : public Error {
public:
    using Error::Error;
};

// The instance lies outside what a solver can do (conflict degree > 2).
class CapabilityError : public Error {
public:
    using Error::Error;
};

// A configured search/oracle budget would be exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace lapcs
