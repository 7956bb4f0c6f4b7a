#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slx {

enum class ErrorKind {
    LexError,
    ParseError,
    UnboundVariable,
    UnsetRead,
    DivisionByZero,
    TypeMismatch,
    ArithmeticOverflow,
    NotARoutine,
    ArityError,
    CallDepthExceeded,
    PromiseCycle,
    DisciplineError,
    ScopeDeclError,
};

std::string_view error_kind_name(ErrorKind kind);

// Single failure type for lexing, parsing, and execution. run_program
// catches it and materializes the failure into RunOutcome::error.
class SlxError : public std::runtime_error {
public:
    SlxError(ErrorKind kind, std::string message, int line = 0, int col = 0)
        : std::runtime_error(std::move(message)), kind(kind), line(line), col(col) {}

    ErrorKind kind;
    int line;  // 1-based; 0 until the failing node is known
    int col;   // 1-based; 0 when not applicable
};

}  // namespace slx
