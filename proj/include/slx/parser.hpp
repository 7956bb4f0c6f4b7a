#pragma once

#include <string_view>
#include <vector>

#include "slx/ast.hpp"
#include "slx/token.hpp"

namespace slx {

// Recursive-descent parse of a token stream. Throws ParseError with the
// position of the offending token. `return` outside a routine body and
// duplicate parameter names are rejected here.
Program parse(const std::vector<Token>& tokens);

// tokenize + parse in one step.
Program parse_source(std::string_view source);

}  // namespace slx
