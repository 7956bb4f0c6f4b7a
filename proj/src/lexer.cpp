#include "slx/lexer.hpp"

#include <array>
#include <cctype>
#include <string>

#include "slx/errors.hpp"

namespace slx {

namespace {

constexpr std::array<std::string_view, 7> kKeywords = {
    "let", "local", "global", "def", "return", "print", "inspect",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_single_symbol(char c) {
    switch (c) {
        case '=':
        case ';':
        case ',':
        case '(':
        case ')':
        case '{':
        case '}':
        case '+':
        case '-':
        case '*':
        case '/': return true;
        default: return false;
    }
}

}  // namespace

bool is_keyword(std::string_view word) {
    for (std::string_view kw : kKeywords) {
        if (word == kw) return true;
    }
    return false;
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    int line = 1;
    int col = 1;
    std::size_t i = 0;

    while (i < source.size()) {
        char c = source[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < source.size() && source[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }

        int tok_line = line;
        int tok_col = col;

        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t start = i;
            while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i])) != 0) {
                ++i;
                ++col;
            }
            tokens.push_back({TokenKind::Int, std::string(source.substr(start, i - start)),
                              tok_line, tok_col});
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < source.size() && is_ident_char(source[i])) {
                ++i;
                ++col;
            }
            std::string text(source.substr(start, i - start));
            TokenKind kind = is_keyword(text) ? TokenKind::Keyword : TokenKind::Ident;
            tokens.push_back({kind, std::move(text), tok_line, tok_col});
            continue;
        }
        if (c == '<') {
            // `<<=` is the only multi-character symbol.
            if (source.substr(i, 3) == "<<=") {
                tokens.push_back({TokenKind::Symbol, "<<=", tok_line, tok_col});
                i += 3;
                col += 3;
                continue;
            }
            throw SlxError(ErrorKind::LexError, "unsupported character '<' (col " +
                                                    std::to_string(tok_col) + ")",
                           tok_line, tok_col);
        }
        if (is_single_symbol(c)) {
            tokens.push_back({TokenKind::Symbol, std::string(1, c), tok_line, tok_col});
            ++i;
            ++col;
            continue;
        }
        throw SlxError(ErrorKind::LexError,
                       std::string("unsupported character '") + c + "' (col " +
                           std::to_string(tok_col) + ")",
                       tok_line, tok_col);
    }
    return tokens;
}

}  // namespace slx
