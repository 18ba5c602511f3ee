#pragma once

#include <stdexcept>
#include <string>

namespace grit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external input (polynomial text, JSON files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An operation was called outside its domain (zero polynomial degree,
/// singular matrix, unbound variable, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace grit
