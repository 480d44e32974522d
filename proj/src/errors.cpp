#include "maxsing/errors.hpp"

namespace maxsing {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InfinitelyNearObstruction: return "InfinitelyNearObstruction";
    case ErrorKind::DegenerateResult: return "DegenerateResult";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::DegenerateGraph: return "DegenerateGraph";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    }
    return "UnknownError";
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::InvariantViolation:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::LengthMismatch:
        return 1;
    default:
        return 2;
    }
}

}  // namespace maxsing
