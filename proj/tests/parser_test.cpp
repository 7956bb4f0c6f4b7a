#include "slx/parser.hpp"

#include "doctest.h"
#include "slx/errors.hpp"
#include "slx/lexer.hpp"

using namespace slx;

TEST_SUITE_BEGIN("parser");

TEST_CASE("routine with defaulted parameter") {
    Program p = parse_source("def h(x = 1) { let a = 2; return x + a; }");
    REQUIRE(p.statements.size() == 1);
    const auto& def = std::get<RoutineDefStmt>(p.statements[0]->node);
    CHECK(def.name == "h");
    REQUIRE(def.params.size() == 1);
    CHECK(def.params[0].name == "x");
    REQUIRE(def.params[0].default_expr != nullptr);
    CHECK(std::get<IntLit>(def.params[0].default_expr->node).value == 1);

    REQUIRE(def.body.size() == 2);
    const auto& let = std::get<LetStmt>(def.body[0]->node);
    CHECK(let.name == "a");
    CHECK(std::get<IntLit>(let.value->node).value == 2);
    const auto& ret = std::get<ReturnStmt>(def.body[1]->node);
    REQUIRE(ret.value != nullptr);
    const auto& sum = std::get<BinOp>(ret.value->node);
    CHECK(sum.op == BinOpKind::Add);
    CHECK(std::get<VarRef>(sum.lhs->node).name == "x");
    CHECK(std::get<VarRef>(sum.rhs->node).name == "a");
}

TEST_CASE("print with several arguments") {
    Program p = parse_source("print(x, y, z);");
    const auto& print = std::get<PrintStmt>(p.statements[0]->node);
    REQUIRE(print.args.size() == 3);
    CHECK(std::get<VarRef>(print.args[0]->node).name == "x");
    CHECK(std::get<VarRef>(print.args[1]->node).name == "y");
    CHECK(std::get<VarRef>(print.args[2]->node).name == "z");
}

TEST_CASE("return at top level is rejected") {
    try {
        parse_source("return 1;");
        FAIL("expected ParseError");
    } catch (const SlxError& e) {
        CHECK(e.kind == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("return outside routine") != std::string::npos);
        CHECK(e.line == 1);
        CHECK(e.col == 1);
    }
}

TEST_CASE("return inside nested routine belongs to the inner one") {
    CHECK_NOTHROW(parse_source("def f() { def g() { return 1; } }"));
}

TEST_CASE("multiplication binds tighter than addition") {
    Program p = parse_source("let v = 1 + 2 * 3;");
    const auto& let = std::get<LetStmt>(p.statements[0]->node);
    const auto& add = std::get<BinOp>(let.value->node);
    CHECK(add.op == BinOpKind::Add);
    CHECK(std::get<IntLit>(add.lhs->node).value == 1);
    const auto& mul = std::get<BinOp>(add.rhs->node);
    CHECK(mul.op == BinOpKind::Mul);
}

TEST_CASE("binary operators are left-associative") {
    Program p = parse_source("let v = 10 - 3 - 2;");
    const auto& let = std::get<LetStmt>(p.statements[0]->node);
    const auto& outer = std::get<BinOp>(let.value->node);
    CHECK(outer.op == BinOpKind::Sub);
    CHECK(std::get<IntLit>(outer.rhs->node).value == 2);
    const auto& inner = std::get<BinOp>(outer.lhs->node);
    CHECK(std::get<IntLit>(inner.lhs->node).value == 10);
    CHECK(std::get<IntLit>(inner.rhs->node).value == 3);
}

TEST_CASE("unary minus binds tightest") {
    Program p = parse_source("let v = -x * y;");
    const auto& let = std::get<LetStmt>(p.statements[0]->node);
    const auto& mul = std::get<BinOp>(let.value->node);
    CHECK(mul.op == BinOpKind::Mul);
    CHECK(std::holds_alternative<Neg>(mul.lhs->node));
    CHECK(std::holds_alternative<VarRef>(mul.rhs->node));
}

TEST_CASE("parenthesized groups override precedence") {
    Program p = parse_source("let v = (1 + 2) * 3;");
    const auto& let = std::get<LetStmt>(p.statements[0]->node);
    const auto& mul = std::get<BinOp>(let.value->node);
    CHECK(mul.op == BinOpKind::Mul);
    CHECK(std::holds_alternative<BinOp>(mul.lhs->node));
}

TEST_CASE("call arguments and nested calls") {
    Program p = parse_source("let v = f(g(1), 2 + 3);");
    const auto& let = std::get<LetStmt>(p.statements[0]->node);
    const auto& call = std::get<CallExpr>(let.value->node);
    CHECK(call.callee == "f");
    REQUIRE(call.args.size() == 2);
    CHECK(std::get<CallExpr>(call.args[0]->node).callee == "g");
}

TEST_CASE("statement forms parse") {
    Program p = parse_source(
        "local y;\n"
        "global z = 4;\n"
        "count <<= count + 1;\n"
        "inspect;\n"
        "f();\n");
    REQUIRE(p.statements.size() == 5);
    CHECK(std::holds_alternative<LocalDeclStmt>(p.statements[0]->node));
    CHECK(std::get<LocalDeclStmt>(p.statements[0]->node).init == nullptr);
    CHECK(std::get<GlobalDeclStmt>(p.statements[1]->node).init != nullptr);
    CHECK(std::get<SuperAssignStmt>(p.statements[2]->node).name == "count");
    CHECK(std::holds_alternative<InspectStmt>(p.statements[3]->node));
    CHECK(std::holds_alternative<CallStmt>(p.statements[4]->node));
}

TEST_CASE("duplicate parameter names are rejected") {
    try {
        parse_source("def f(a, b, a) { }");
        FAIL("expected ParseError");
    } catch (const SlxError& e) {
        CHECK(e.kind == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("duplicate parameter 'a'") != std::string::npos);
    }
}

TEST_CASE("parse errors point at a real offset") {
    const std::string source = "let x = 3\nprint(x);";
    try {
        parse_source(source);
        FAIL("expected ParseError");
    } catch (const SlxError& e) {
        CHECK(e.kind == ErrorKind::ParseError);
        // Missing ';' is reported at the token that broke the expectation.
        CHECK(e.line == 2);
        CHECK(e.col == 1);
        CHECK(std::string(e.what()).find("expected ';'") != std::string::npos);
    }
}

TEST_CASE("unexpected end of input") {
    try {
        parse_source("def f() {");
        FAIL("expected ParseError");
    } catch (const SlxError& e) {
        CHECK(e.kind == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("end of input") != std::string::npos);
    }
}

TEST_CASE("bare identifier is not a statement") {
    CHECK_THROWS_AS(parse_source("x;"), SlxError);
    CHECK_THROWS_AS(parse_source("x = 3;"), SlxError);
}

TEST_CASE("empty print is rejected") {
    CHECK_THROWS_AS(parse_source("print();"), SlxError);
}

TEST_CASE("integer literal out of range") {
    CHECK_NOTHROW(parse_source("let v = 9223372036854775807;"));
    try {
        parse_source("let v = 9223372036854775808;");
        FAIL("expected ParseError");
    } catch (const SlxError& e) {
        CHECK(e.kind == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("statement lines are recorded") {
    Program p = parse_source("let x = 1;\n\nprint(x);\n");
    CHECK(p.statements[0]->line == 1);
    CHECK(p.statements[1]->line == 3);
}

TEST_SUITE_END();
