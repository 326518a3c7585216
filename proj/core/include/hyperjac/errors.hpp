#pragma once

#include <stdexcept>
#include <string>

namespace hyperjac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Positions are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column, std::string token)
        : Error(std::move(message)), line_(line), column_(column), token_(std::move(token)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    int line_;
    int column_;
    std::string token_;
};

/// An operation was called outside its domain (slot mismatch, zero input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class FieldMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DivisionByZeroError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A request lies outside the hypotheses under which a closed formula is known.
class UnsupportedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace hyperjac
