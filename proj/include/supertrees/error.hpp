#ifndef SUPERTREES_ERROR_HPP
#define SUPERTREES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace supertrees {

enum class ErrorCode {
    NonUniformEdge,
    DuplicateEdge,
    VertexOutOfRange,
    Disconnected,
    HasCycle,
    IntersectionTooLarge,
    DimensionMismatch,
    NoConvergence,
    NotTwoUniform,
    BadParams,
    InputNotATree,
    UNotOutsideEdge,
    VNotInEdge,
    ResultHasDuplicateEdge,
    EdgeIsPendent,
    UNotInEdge,
    NotBranchEdge,
    EdgesNotDisjoint,
    BadSubsetSizes,
    NotAGraftConfiguration,
    NotRealizable,
    TooLarge,
    UnknownClaim,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Thrown when the power iteration hits the iteration cap; carries the
// partial bracket so callers can inspect how far it got.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double lower, double upper, int iterations)
        : Error(ErrorCode::NoConvergence, message),
          lower_(lower), upper_(upper), iterations_(iterations) {}

    double lower() const { return lower_; }
    double upper() const { return upper_; }
    int iterations() const { return iterations_; }

private:
    double lower_;
    double upper_;
    int iterations_;
};

} // namespace supertrees

#endif // SUPERTREES_ERROR_HPP
