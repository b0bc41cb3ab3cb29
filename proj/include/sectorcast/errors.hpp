#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sectorcast {

/// Index or calendar month outside a series' span.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Caller passed an argument that violates a precondition.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is too short for the requested computation.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what)
        : std::runtime_error("insufficient data: " + what) {}
};

/// Input data is well-formed but semantically invalid (duplicates, empty files).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A calendar month inside the covered span has no observations.
class GapError : public DataError {
public:
    using DataError::DataError;
};

/// Malformed CSV row.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace sectorcast
