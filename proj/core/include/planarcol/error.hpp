#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planarcol {

enum class ErrorCode {
    SyntaxError,
    AsymmetricRotation,
    DuplicateNeighbour,
    MissingMultiplicity,
    NegativeMultiplicity,
    EulerViolation,
    NotTwoConnected,
    TooLarge,
    OddVertexCount,
    NotABond,
    BadColouring,
    AmbiguousContext,
    NotATriangle,
    UnsupportedD,
    IdentityViolation,
    MismatchedD,
    NotAFourCycle,
    WouldGoNegative,
    NoCommonRegion,
    InvalidArgument,
};

auto to_string(ErrorCode code) -> std::string_view;

/// Single exception type for the library; `code()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    auto code() const noexcept -> ErrorCode { return code_; }

private:
    ErrorCode code_;
};

}  // namespace planarcol
