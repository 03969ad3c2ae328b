#pragma once

#include <stdexcept>
#include <string>

namespace gsco {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text: regex, rule, automaton file, word list.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a contract (reserved symbol, empty
/// overlap, ALL rule set where an explicit one is required, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

/// A configurable resource guard was exceeded.
class CapError : public Error {
public:
    using Error::Error;
};

} // namespace gsco
