#ifndef CABLEKIT_ERROR_HPP
#define CABLEKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cablekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, polynomials, rationals, CSV rows).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string token)
        : Error(what + " (token '" + token + "')"), token_(std::move(token)) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A value produced during a computation broke one of the library's invariants.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A Tristram-Levine evaluation point sits on, or too close to, a root of the
/// Alexander polynomial.
class JumpPointError : public Error {
public:
    using Error::Error;
};

} // namespace cablekit

#endif // CABLEKIT_ERROR_HPP
