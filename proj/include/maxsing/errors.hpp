#pragma once

#include <stdexcept>
#include <string>

namespace maxsing {

// Failure classes shared by all modules. The CLI maps them onto exit codes:
// input faults exit with 1, violated mathematical preconditions with 2.
enum class ErrorKind {
    MalformedInput,
    InvariantViolation,
    InfinitelyNearObstruction,
    DegenerateResult,
    IndexOutOfRange,
    LengthMismatch,
    NotCompatible,
    DegenerateGraph,
    PreconditionFailed,
};

const char* to_string(ErrorKind kind);

int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

}  // namespace maxsing
