#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

enum class ErrorKind {
    CapExceeded,      // ring realization would exceed the element-count cap
    BudgetExceeded,   // ideal enumeration / sweep budget exceeded
    RingMismatch,     // operands belong to different rings
    ParseError,       // syntax error; carries a byte offset
    NotAnIdeal,       // member set is not closed
    NotMultClosed,    // multiplicative set literal is not closed
    InvalidArgument,  // anything else rejected up front
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::CapExceeded: return "cap-exceeded";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::RingMismatch: return "ring-mismatch";
        case ErrorKind::ParseError: return "parse-error";
        case ErrorKind::NotAnIdeal: return "not-an-ideal";
        case ErrorKind::NotMultClosed: return "not-multiplicatively-closed";
        case ErrorKind::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

/// Structured error: every failure the library reports carries a kind and,
/// for parse errors, the byte offset of the offending character.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, long offset = -1)
        : std::runtime_error(std::move(message)), kind_(kind), offset_(offset) {}

    ErrorKind kind() const { return kind_; }
    long offset() const { return offset_; }  // -1 when not applicable

private:
    ErrorKind kind_;
    long offset_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg, long offset = -1) {
    throw Error(k, msg, offset);
}

}  // namespace ringlab
