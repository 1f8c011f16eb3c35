#pragma once

#include <stdexcept>
#include <string>

namespace tropcomm {

// Base class for all domain errors raised by this library.
class TropError : public std::runtime_error {
public:
    explicit TropError(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes do not match (sizes, variable counts, ...).
class DimensionMismatch : public TropError {
public:
    explicit DimensionMismatch(const std::string& what) : TropError(what) {}
};

// A matrix required to be normal (zero diagonal, nonpositive entries) is not.
class NotNormal : public TropError {
public:
    explicit NotNormal(const std::string& what) : TropError(what) {}
};

// A matrix or vector required to be free of -inf entries has one.
class NotReal : public TropError {
public:
    explicit NotReal(const std::string& what) : TropError(what) {}
};

// An argument is outside the documented domain of an operation.
class DomainError : public TropError {
public:
    explicit DomainError(const std::string& what) : TropError(what) {}
};

// Malformed input text/JSON. Carries a human-readable location.
class ParseError : public TropError {
public:
    ParseError(const std::string& where, const std::string& what)
        : TropError(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

} // namespace tropcomm
