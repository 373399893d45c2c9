#include "polarmin/error.hpp"

namespace polarmin {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::Empty: return "Empty";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::SingularTransform: return "SingularTransform";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::NoClosedForm: return "NoClosedForm";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::ZeroNormal: return "ZeroNormal";
        case ErrorKind::NoSlackEdge: return "NoSlackEdge";
        case ErrorKind::NotRotatable: return "NotRotatable";
        case ErrorKind::NoFeasibleStart: return "NoFeasibleStart";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

}  // namespace polarmin
