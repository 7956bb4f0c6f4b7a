#pragma once

#include <string>

#include "slx/ast.hpp"

namespace slx {

// Canonical source text of an expression: single spaces around binary
// operators, parentheses only where precedence demands them. For any
// expression e produced by parse, parse_source(render_expr(e)) is
// structurally equal to e.
std::string render_expr(const Expr& expr);

}  // namespace slx
