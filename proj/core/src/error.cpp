#include "resgaps/error.hpp"

namespace resgaps {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::MalformedSpec: return "MalformedSpec";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidComponent: return "InvalidComponent";
        case ErrorCode::UndefinedPair: return "UndefinedPair";
        case ErrorCode::NoPositiveContribution: return "NoPositiveContribution";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::RankZero: return "RankZero";
        case ErrorCode::Inapplicable: return "Inapplicable";
        case ErrorCode::NotIntegral: return "NotIntegral";
    }
    return "Unknown";
}

}  // namespace resgaps
