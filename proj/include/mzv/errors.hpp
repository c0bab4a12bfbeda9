#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

// Input lies outside the domain of an operation (wrong carrier, divergent
// series, violated precondition).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A product of non-local elements was requested.
class LocalityViolation : public std::runtime_error {
public:
    explicit LocalityViolation(const std::string& what) : std::runtime_error(what) {}
};

// A denominator factor vanishes at the evaluation point.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// The assignment does not cover every variable of the fraction.
class MissingVariable : public std::runtime_error {
public:
    explicit MissingVariable(const std::string& what) : std::runtime_error(what) {}
};

// Text input rejected; `offset` is the byte position of the first invalid token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(expected) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// JSON input does not match the documented schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mzv
