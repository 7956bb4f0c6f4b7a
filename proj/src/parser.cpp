#include "slx/parser.hpp"

#include <charconv>
#include <utility>

#include "slx/errors.hpp"
#include "slx/lexer.hpp"

namespace slx {

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    Program parse_program() {
        Program program;
        while (!at_end()) {
            program.statements.push_back(parse_stmt());
        }
        return program;
    }

private:
    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    int routine_depth_ = 0;

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token* peek(std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
    }

    const Token& advance() { return tokens_[pos_++]; }

    bool at_symbol(std::string_view sym) const {
        const Token* t = peek();
        return t != nullptr && t->kind == TokenKind::Symbol && t->text == sym;
    }

    bool at_keyword(std::string_view kw) const {
        const Token* t = peek();
        return t != nullptr && t->kind == TokenKind::Keyword && t->text == kw;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token* t = peek();
        int line = 0;
        int col = 0;
        std::string found = "end of input";
        if (t != nullptr) {
            line = t->line;
            col = t->col;
            found = "'" + t->text + "'";
        } else if (!tokens_.empty()) {
            line = tokens_.back().line;
            col = tokens_.back().col + static_cast<int>(tokens_.back().text.size());
        }
        throw SlxError(ErrorKind::ParseError,
                       "expected " + expected + ", found " + found + " (col " +
                           std::to_string(col) + ")",
                       line, col);
    }

    const Token& expect_symbol(std::string_view sym) {
        if (!at_symbol(sym)) fail("'" + std::string(sym) + "'");
        return advance();
    }

    const Token& expect_ident() {
        const Token* t = peek();
        if (t == nullptr || t->kind != TokenKind::Ident) fail("identifier");
        return advance();
    }

    StmtPtr parse_stmt() {
        const Token* t = peek();
        if (t == nullptr) fail("statement");
        if (t->kind == TokenKind::Keyword) {
            if (t->text == "let") return parse_let();
            if (t->text == "local") return parse_decl(true);
            if (t->text == "global") return parse_decl(false);
            if (t->text == "def") return parse_def();
            if (t->text == "print") return parse_print();
            if (t->text == "inspect") return parse_inspect();
            if (t->text == "return") return parse_return();
            fail("statement");
        }
        if (t->kind == TokenKind::Ident) {
            const Token* next = peek(1);
            if (next != nullptr && next->kind == TokenKind::Symbol) {
                if (next->text == "<<=") return parse_super_assign();
                if (next->text == "(") return parse_call_stmt();
            }
            advance();
            fail("'<<=' or '('");
        }
        fail("statement");
    }

    StmtPtr parse_let() {
        const Token& kw = advance();
        std::string name = expect_ident().text;
        expect_symbol("=");
        ExprPtr value = parse_expr();
        expect_symbol(";");
        return make_stmt(kw.line, LetStmt{std::move(name), std::move(value)});
    }

    StmtPtr parse_decl(bool local) {
        const Token& kw = advance();
        std::string name = expect_ident().text;
        ExprPtr init;
        if (at_symbol("=")) {
            advance();
            init = parse_expr();
        }
        expect_symbol(";");
        if (local) return make_stmt(kw.line, LocalDeclStmt{std::move(name), std::move(init)});
        return make_stmt(kw.line, GlobalDeclStmt{std::move(name), std::move(init)});
    }

    StmtPtr parse_super_assign() {
        const Token& name_tok = advance();
        advance();  // <<=
        ExprPtr value = parse_expr();
        expect_symbol(";");
        return make_stmt(name_tok.line, SuperAssignStmt{name_tok.text, std::move(value)});
    }

    StmtPtr parse_def() {
        const Token& kw = advance();
        std::string name = expect_ident().text;
        expect_symbol("(");
        std::vector<Param> params;
        if (!at_symbol(")")) params = parse_params();
        expect_symbol(")");
        expect_symbol("{");
        ++routine_depth_;
        std::vector<StmtPtr> body;
        while (!at_symbol("}")) {
            if (at_end()) fail("'}'");
            body.push_back(parse_stmt());
        }
        --routine_depth_;
        advance();  // }
        return make_stmt(kw.line, RoutineDefStmt{std::move(name), std::move(params), std::move(body)});
    }

    std::vector<Param> parse_params() {
        std::vector<Param> params;
        while (true) {
            const Token& name_tok = expect_ident();
            for (const Param& p : params) {
                if (p.name == name_tok.text) {
                    throw SlxError(ErrorKind::ParseError,
                                   "duplicate parameter '" + name_tok.text + "' (col " +
                                       std::to_string(name_tok.col) + ")",
                                   name_tok.line, name_tok.col);
                }
            }
            Param param{name_tok.text, nullptr};
            if (at_symbol("=")) {
                advance();
                param.default_expr = parse_expr();
            }
            params.push_back(std::move(param));
            if (!at_symbol(",")) break;
            advance();
        }
        return params;
    }

    StmtPtr parse_call_stmt() {
        const Token& name_tok = advance();
        ExprPtr call = parse_call_expr(name_tok);
        expect_symbol(";");
        return make_stmt(name_tok.line, CallStmt{std::move(call)});
    }

    StmtPtr parse_print() {
        const Token& kw = advance();
        expect_symbol("(");
        std::vector<ExprPtr> args;
        args.push_back(parse_expr());
        while (at_symbol(",")) {
            advance();
            args.push_back(parse_expr());
        }
        expect_symbol(")");
        expect_symbol(";");
        return make_stmt(kw.line, PrintStmt{std::move(args)});
    }

    StmtPtr parse_inspect() {
        const Token& kw = advance();
        expect_symbol(";");
        return make_stmt(kw.line, InspectStmt{});
    }

    StmtPtr parse_return() {
        const Token& kw = advance();
        if (routine_depth_ == 0) {
            throw SlxError(ErrorKind::ParseError,
                           "return outside routine (col " + std::to_string(kw.col) + ")", kw.line,
                           kw.col);
        }
        ExprPtr value;
        if (!at_symbol(";")) value = parse_expr();
        expect_symbol(";");
        return make_stmt(kw.line, ReturnStmt{std::move(value)});
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (at_symbol("+") || at_symbol("-")) {
            BinOpKind op = advance().text == "+" ? BinOpKind::Add : BinOpKind::Sub;
            ExprPtr rhs = parse_term();
            int line = lhs->line;
            lhs = make_expr(line, BinOp{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (at_symbol("*") || at_symbol("/")) {
            BinOpKind op = advance().text == "*" ? BinOpKind::Mul : BinOpKind::Div;
            ExprPtr rhs = parse_factor();
            int line = lhs->line;
            lhs = make_expr(line, BinOp{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        const Token* t = peek();
        if (t == nullptr) fail("expression");
        if (t->kind == TokenKind::Int) {
            advance();
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(t->text.data(), t->text.data() + t->text.size(), value);
            if (ec != std::errc() || ptr != t->text.data() + t->text.size()) {
                throw SlxError(ErrorKind::ParseError,
                               "integer literal out of range (col " + std::to_string(t->col) + ")",
                               t->line, t->col);
            }
            return make_expr(t->line, IntLit{value});
        }
        if (t->kind == TokenKind::Ident) {
            const Token& name_tok = advance();
            if (at_symbol("(")) return parse_call_expr(name_tok);
            return make_expr(name_tok.line, VarRef{name_tok.text});
        }
        if (at_symbol("-")) {
            const Token& minus = advance();
            ExprPtr operand = parse_factor();
            return make_expr(minus.line, Neg{std::move(operand)});
        }
        if (at_symbol("(")) {
            advance();
            ExprPtr inner = parse_expr();
            expect_symbol(")");
            return inner;
        }
        fail("expression");
    }

    // Caller consumed the callee identifier; cursor sits on '('.
    ExprPtr parse_call_expr(const Token& name_tok) {
        expect_symbol("(");
        std::vector<ExprPtr> args;
        if (!at_symbol(")")) {
            args.push_back(parse_expr());
            while (at_symbol(",")) {
                advance();
                args.push_back(parse_expr());
            }
        }
        expect_symbol(")");
        return make_expr(name_tok.line, CallExpr{name_tok.text, std::move(args)});
    }

    template <typename Node>
    static ExprPtr make_expr(int line, Node&& node) {
        auto e = std::make_unique<Expr>();
        e->line = line;
        e->node = std::forward<Node>(node);
        return e;
    }

    template <typename Node>
    static StmtPtr make_stmt(int line, Node&& node) {
        auto s = std::make_unique<Stmt>();
        s->line = line;
        s->node = std::forward<Node>(node);
        return s;
    }
};

}  // namespace

Program parse(const std::vector<Token>& tokens) {
    return Parser(tokens).parse_program();
}

Program parse_source(std::string_view source) {
    return parse(tokenize(source));
}

}  // namespace slx
