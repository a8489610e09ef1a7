#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mumch {

enum class ErrorCode {
    NonHermitianInput,
    DimMismatch,
    ZeroOperator,
    BadDimension,
    NonHermitian,
    NonTraceless,
    NonOrthonormal,
    BadPartition,
    TZero,
    TOutOfRange,
    DegenerateBasis,
    BadProbabilities,
    NotSelfConsistent,
    BadAxis,
    NotSufficientRegime,
    NotCP,
    BadInput,
    IoError,
};

std::string_view code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the
// CLI maps it to {"error": code_name, "detail": what()}.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mumch
