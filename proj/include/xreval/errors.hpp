#pragma once

#include <stdexcept>
#include <string>

namespace xreval {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A symbol was referenced that the catalog does not declare.
class UnknownOperatorError : public Error {
public:
    explicit UnknownOperatorError(std::string symbol)
        : Error("unknown operator '" + symbol + "'"), symbol_(std::move(symbol)) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// The same operator symbol was declared twice in one catalog.
class DuplicateSymbolError : public Error {
public:
    explicit DuplicateSymbolError(std::string symbol)
        : Error("duplicate operator symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class NegativeDurationError : public Error {
public:
    NegativeDurationError() : Error("durations must be non-negative") {}
};

class InvalidIdentifierError : public Error {
public:
    explicit InvalidIdentifierError(const std::string& text)
        : Error("invalid identifier '" + text + "'") {}
};

/// A symbolic parameter had no value when one was required.
class UnboundParameterError : public Error {
public:
    explicit UnboundParameterError(std::string name)
        : Error("unbound parameter '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ItemOutOfRangeError : public Error {
public:
    using Error::Error;
};

class WrongItemCountError : public Error {
public:
    using Error::Error;
};

/// NASA-TLX pairwise weights must sum to exactly 15.
class WeightSumError : public Error {
public:
    using Error::Error;
};

/// Structural CSV problem (bad header, unterminated quote); row-level
/// validation failures are diagnostics, not exceptions.
class MalformedCsvError : public Error {
public:
    using Error::Error;
};

/// Fewer than two complete within-subject blocks (or fewer than two modes).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflowError : public Error {
public:
    ArithmeticOverflowError() : Error("integer overflow in time arithmetic") {}
};

/// Caller violated a documented precondition (negative binding, repeat < 1, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure; the CLI maps this to exit code 2.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace xreval
