#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarmin {

enum class ErrorKind {
    DegenerateInput,
    Unbounded,
    Empty,
    OriginNotInterior,
    SingularTransform,
    NotSymmetric,
    BadParams,
    NoClosedForm,
    NotNormalized,
    ZeroNormal,
    NoSlackEdge,
    NotRotatable,
    NoFeasibleStart,
    ParseError,
    InternalInvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace polarmin
