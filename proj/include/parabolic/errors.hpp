#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parabolic {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands carry different truncation degrees.
class TruncationMismatch : public AlgebraError {
public:
    TruncationMismatch(int a, int b)
        : AlgebraError("truncation mismatch: degree " + std::to_string(a) + " vs " + std::to_string(b))
    {
    }
};

/// A series operation received an argument with a parameter-free part.
class ValuationError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class NotNilpotentError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class DimensionError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownSymbolError : public ParseError {
public:
    UnknownSymbolError(const std::string& symbol, std::size_t position)
        : ParseError("unknown symbol '" + symbol + "'", position), symbol_(symbol)
    {
    }

    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

} // namespace parabolic
