#pragma once

#include <string_view>
#include <vector>

#include "slx/token.hpp"

namespace slx {

// Splits source text into tokens. Whitespace and '#' line comments are
// discarded; every token keeps its 1-based line/column. Throws LexError
// on any character outside the grammar.
std::vector<Token> tokenize(std::string_view source);

}  // namespace slx
