#include "mumch/error.hpp"

namespace mumch {

std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianInput: return "NonHermitianInput";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::ZeroOperator: return "ZeroOperator";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::NonHermitian: return "NonHermitian";
        case ErrorCode::NonTraceless: return "NonTraceless";
        case ErrorCode::NonOrthonormal: return "NonOrthonormal";
        case ErrorCode::BadPartition: return "BadPartition";
        case ErrorCode::TZero: return "TZero";
        case ErrorCode::TOutOfRange: return "TOutOfRange";
        case ErrorCode::DegenerateBasis: return "DegenerateBasis";
        case ErrorCode::BadProbabilities: return "BadProbabilities";
        case ErrorCode::NotSelfConsistent: return "NotSelfConsistent";
        case ErrorCode::BadAxis: return "BadAxis";
        case ErrorCode::NotSufficientRegime: return "NotSufficientRegime";
        case ErrorCode::NotCP: return "NotCP";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace mumch
