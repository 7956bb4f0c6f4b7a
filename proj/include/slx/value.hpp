#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "slx/ast.hpp"

namespace slx {

struct Frame;

enum class Discipline { Dynamic, Lexical };

std::string_view discipline_name(Discipline d);  // "DYNAMIC" / "LEXICAL"

// Declared-but-unassigned marker (`local y;`, `global y;`, or a parameter
// with neither argument nor default). Reading one is an error.
struct Unset {};

struct RoutineValue {
    std::string name;
    const RoutineDefStmt* def = nullptr;
    // Frame the definition executed in. Engaged only under the lexical
    // discipline; dynamic-mode routines carry no environment.
    std::weak_ptr<Frame> captured_env;
    bool has_captured_env = false;
};

// Unevaluated default-argument expression. Forced on every reference in
// the owner frame's context; never memoized.
struct PromiseValue {
    std::string param;
    const Expr* expr = nullptr;
    std::weak_ptr<Frame> owner;
    int owner_id = 0;
};

using Value = std::variant<std::int64_t, RoutineValue, PromiseValue, Unset>;

// Display form: digits for integers, <routine:NAME> for routines, the
// default expression's source text for promises, <unset> otherwise.
std::string value_text(const Value& v);

}  // namespace slx
