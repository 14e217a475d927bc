#include "equispec/error.hpp"

namespace equispec {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::ElementNotInCell: return "ElementNotInCell";
        case ErrorCode::CellTooSmall: return "CellTooSmall";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::NotEquitable: return "NotEquitable";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::AlphaNotEigenvalue: return "AlphaNotEigenvalue";
        case ErrorCode::AlphaZero: return "AlphaZero";
        case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
        case ErrorCode::EigenvalueMismatch: return "EigenvalueMismatch";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::MissingPhi: return "MissingPhi";
        case ErrorCode::NoDesignatedPartition: return "NoDesignatedPartition";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace equispec
