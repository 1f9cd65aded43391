#pragma once

#include <stdexcept>
#include <string>

namespace veerkit {

enum class ErrorKind {
    MalformedSignature,
    AngleLengthMismatch,
    InvalidGluing,
    NotTransverse,
    NotVeering,
    UnconstrainedEdge,
    BadTetIndex,
    NotAMouth,
    NotConvex,
    FaceNotOnBoundary,
    ForkedRiverHasNoComplexity,
    EdgeNotInContinent,
    DepthExhausted,
    InsufficientContinent,
    BadCuspName,
    Internal,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Internal consistency failure; should never fire on a veering triangulation.
#define VEERKIT_ASSERT(cond, msg)                                                   \
    do {                                                                            \
        if (!(cond)) throw ::veerkit::Error(::veerkit::ErrorKind::Internal, (msg)); \
    } while (0)

} // namespace veerkit
