#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moqa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (DFA files, automaton files). Carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A letter sequence that does not denote a valid shuffle ideal.
class SpecError : public Error {
public:
    using Error::Error;
};

/// Inputs rejected by an operation: foreign symbols, alphabet mismatches,
/// invalid automata.
class InputError : public Error {
public:
    using Error::Error;
};

/// Matrix shapes that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A computation exceeded its configured size budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace moqa
