#pragma once

#include <stdexcept>
#include <string>

namespace avrc {

enum class ErrorCode {
    InvalidArgument,
    UnknownEvent,
    UnboundVariable,
    InvalidEdge,
    EnumerationCapExceeded,
    InducementCycle,
    MalformedDocument,
};

// Thrown by analysis operations for conditions the parser normally rules
// out (unknown ids, unbound variables) and for genuine runtime limits
// (enumeration cap, inducement cycles).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace avrc
