#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polydual {

enum class ErrorCode {
    InvalidArgument,
    Realizability,
    Degenerate,
    NoIntersection,
    Range,
    TriangleInequality,
    Concentric,
    SharedVertex,
    Congruent,
};

/// Stable machine-readable name, e.g. "TRIANGLE_INEQUALITY".
std::string_view code_name(ErrorCode code) noexcept;

/// Numeric diagnostics attached to an error (name, value).
using ErrorContext = std::vector<std::pair<std::string, double>>;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, ErrorContext context = {})
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const ErrorContext& context() const noexcept { return context_; }

private:
    ErrorCode code_;
    ErrorContext context_;
};

template <ErrorCode Code>
class CodedError : public Error {
public:
    explicit CodedError(const std::string& message, ErrorContext context = {})
        : Error(Code, message, std::move(context)) {}
};

using InvalidArgumentError = CodedError<ErrorCode::InvalidArgument>;
using RealizabilityError = CodedError<ErrorCode::Realizability>;
using DegenerateError = CodedError<ErrorCode::Degenerate>;
using NoIntersectionError = CodedError<ErrorCode::NoIntersection>;
using RangeError = CodedError<ErrorCode::Range>;
using TriangleInequalityError = CodedError<ErrorCode::TriangleInequality>;
using ConcentricError = CodedError<ErrorCode::Concentric>;
using SharedVertexError = CodedError<ErrorCode::SharedVertex>;
using CongruentError = CodedError<ErrorCode::Congruent>;

}  // namespace polydual
