#pragma once

#include <stdexcept>
#include <string>

namespace curvesing {

/// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition or domain violation (bad parameters, degenerate input).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A jet computation did not stabilize within the available truncation.
class StabilizationError : public Error {
public:
    using Error::Error;
};

/// Germ notation could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A verification check (equation, family, congruence) failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace curvesing
