#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropline {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or rational text. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Geometric input that is degenerate where full dimension was required.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A proposed triangulation does not tile the polytope it claims to cover.
class TilingError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed; indicates a bug or a broken invariant.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace tropline
