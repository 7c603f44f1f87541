#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfcone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// d_out * d_in != 0 where a chain complex was expected.
class CompositionNonzero : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NoFlipFound : public Error {
public:
    using Error::Error;
};

class FlipMissing : public Error {
public:
    using Error::Error;
};

/// A constructed map failed the chain-map identity. Only reachable when an
/// invalid complex bypassed validation.
class NotAChainMap : public Error {
public:
    using Error::Error;
};

class TruncationUnstable : public Error {
public:
    using Error::Error;
};

class NotHomologySphere : public Error {
public:
    using Error::Error;
};

class InvalidComplex : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    ValidationError(std::string complex_id, const std::string& detail)
        : Error("complex '" + complex_id + "': " + detail), complex_id_(std::move(complex_id)) {}

    [[nodiscard]] const std::string& complex_id() const noexcept { return complex_id_; }

private:
    std::string complex_id_;
};

class DuplicateName : public Error {
public:
    using Error::Error;
};

}  // namespace hfcone
