#include "planarcol/error.hpp"

namespace planarcol {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
        case ErrorCode::DuplicateNeighbour: return "DuplicateNeighbour";
        case ErrorCode::MissingMultiplicity: return "MissingMultiplicity";
        case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::OddVertexCount: return "OddVertexCount";
        case ErrorCode::NotABond: return "NotABond";
        case ErrorCode::BadColouring: return "BadColouring";
        case ErrorCode::AmbiguousContext: return "AmbiguousContext";
        case ErrorCode::NotATriangle: return "NotATriangle";
        case ErrorCode::UnsupportedD: return "UnsupportedD";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::MismatchedD: return "MismatchedD";
        case ErrorCode::NotAFourCycle: return "NotAFourCycle";
        case ErrorCode::WouldGoNegative: return "WouldGoNegative";
        case ErrorCode::NoCommonRegion: return "NoCommonRegion";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

}  // namespace planarcol
