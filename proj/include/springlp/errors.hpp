#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace springlp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Graph shape violates an operation's precondition (disconnected, wrong kind, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

/// Two points coincide where a force or energy term is singular.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Optimizer produced a non-finite value.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace springlp
