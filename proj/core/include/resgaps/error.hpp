#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resgaps {

enum class ErrorCode {
    NotPositiveDefinite,
    SingularMatrix,
    DimensionMismatch,
    MalformedSpec,
    BudgetExceeded,
    InvalidComponent,
    UndefinedPair,
    NoPositiveContribution,
    ParseError,
    ValidationError,
    NotFound,
    RankZero,
    Inapplicable,
    NotIntegral,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps them onto its exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// ParseError with the 1-based line of the offending input (0 when the input
/// is not line-oriented).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::ParseError, line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    ValidationError(int case_id, const std::string& reason)
        : Error(ErrorCode::ValidationError, "case " + std::to_string(case_id) + ": " + reason),
          case_id_(case_id), reason_(reason) {}

    int case_id() const noexcept { return case_id_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    int case_id_;
    std::string reason_;
};

}  // namespace resgaps
