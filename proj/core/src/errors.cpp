#include "polydual/errors.hpp"

namespace polydual {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::Realizability: return "REALIZABILITY";
        case ErrorCode::Degenerate: return "DEGENERATE";
        case ErrorCode::NoIntersection: return "NO_INTERSECTION";
        case ErrorCode::Range: return "RANGE";
        case ErrorCode::TriangleInequality: return "TRIANGLE_INEQUALITY";
        case ErrorCode::Concentric: return "CONCENTRIC";
        case ErrorCode::SharedVertex: return "SHARED_VERTEX";
        case ErrorCode::Congruent: return "CONGRUENT";
    }
    return "UNKNOWN";
}

}  // namespace polydual
