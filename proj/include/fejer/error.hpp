#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fejer {

enum class ErrorCode {
    InvalidInterval,
    InvalidArgument,
    Syntax,
    UnknownIdentifier,
    Domain,
    NonConstantExponent,
    NotDifferentiable,
    ConvexityViolated,
    SymmetryViolated,
    NegativeWeight,
    RangeViolated,
    MonotonicityViolated,
    AdmissibilityViolated,
    NonpositiveInput,
    ParameterOutOfRange,
    OracleNotConverged,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. The code names the violated
/// precondition; what() carries a human-readable explanation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, std::size_t offset)
        : Error(code, message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace fejer
