#pragma once

#include <string>
#include <string_view>

namespace slx {

enum class TokenKind { Ident, Int, Keyword, Symbol };

struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;
    int col = 1;
};

// Keywords: let, local, global, def, return, print, inspect.
bool is_keyword(std::string_view word);

}  // namespace slx
