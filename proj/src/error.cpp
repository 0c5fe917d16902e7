#include "supertrees/error.hpp"

namespace supertrees {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::IntersectionTooLarge: return "IntersectionTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotTwoUniform: return "NotTwoUniform";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InputNotATree: return "InputNotATree";
    case ErrorCode::UNotOutsideEdge: return "UNotOutsideEdge";
    case ErrorCode::VNotInEdge: return "VNotInEdge";
    case ErrorCode::ResultHasDuplicateEdge: return "ResultHasDuplicateEdge";
    case ErrorCode::EdgeIsPendent: return "EdgeIsPendent";
    case ErrorCode::UNotInEdge: return "UNotInEdge";
    case ErrorCode::NotBranchEdge: return "NotBranchEdge";
    case ErrorCode::EdgesNotDisjoint: return "EdgesNotDisjoint";
    case ErrorCode::BadSubsetSizes: return "BadSubsetSizes";
    case ErrorCode::NotAGraftConfiguration: return "NotAGraftConfiguration";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace supertrees
