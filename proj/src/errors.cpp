#include "slx/errors.hpp"

namespace slx {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LexError: return "LexError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::UnsetRead: return "UnsetRead";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::TypeMismatch: return "TypeMismatch";
        case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorKind::NotARoutine: return "NotARoutine";
        case ErrorKind::ArityError: return "ArityError";
        case ErrorKind::CallDepthExceeded: return "CallDepthExceeded";
        case ErrorKind::PromiseCycle: return "PromiseCycle";
        case ErrorKind::DisciplineError: return "DisciplineError";
        case ErrorKind::ScopeDeclError: return "ScopeDeclError";
    }
    return "UnknownError";
}

}  // namespace slx
