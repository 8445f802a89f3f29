#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schwarz {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed: pole hit, division by zero,
/// constant map where a non-constant one is required, and so on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameters that the exact procedures cannot handle (Generic where
/// exact values are needed, or exact irrational entries).
class UnsupportedParams : public DomainError {
public:
    using DomainError::DomainError;
};

/// Textual input could not be parsed. `position()` is a 0-based offset
/// into the offending string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The monodromy oracle exhausted its search caps without reaching a
/// certified answer.
class Inconclusive : public Error {
public:
    using Error::Error;
};

} // namespace schwarz
