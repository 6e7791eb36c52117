#pragma once

#include <stdexcept>
#include <string>

namespace pfb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (composite p, g = 0, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// x^n - g is reducible where an irreducible binomial was required.
class NotIrreducible : public Error {
public:
    using Error::Error;
};

/// q - 1 (or another value) could not be factored within the rho budget.
class FactorizationTooHard : public Error {
public:
    using Error::Error;
};

/// A requested computation exceeds the configured size bound.
class DeskScaleExceeded : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not. Always indicates a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace pfb
