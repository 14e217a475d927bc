#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equispec {

enum class ErrorCode {
    NonConvergence,
    OrderTooLarge,
    DimensionMismatch,
    SizeMismatch,
    ElementNotInCell,
    CellTooSmall,
    InvalidPartition,
    NotEquitable,
    NotSymmetric,
    AlphaNotEigenvalue,
    AlphaZero,
    DegenerateQuotient,
    EigenvalueMismatch,
    InvalidParams,
    Disconnected,
    MissingPhi,
    NoDesignatedPartition,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Malformed input file; `line()` is 1-based, 0 when the problem is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorCode::ParseError, line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace equispec
