#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace slx {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinOpKind { Add, Sub, Mul, Div };

char bin_op_symbol(BinOpKind op);

struct IntLit {
    std::int64_t value = 0;
};
struct VarRef {
    std::string name;
};
struct BinOp {
    BinOpKind op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Neg {
    ExprPtr operand;
};
struct CallExpr {
    std::string callee;
    std::vector<ExprPtr> args;
};

struct Expr {
    int line = 0;
    std::variant<IntLit, VarRef, BinOp, Neg, CallExpr> node;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Param {
    std::string name;
    ExprPtr default_expr;  // null when the parameter has no default
};

struct LetStmt {
    std::string name;
    ExprPtr value;
};
struct LocalDeclStmt {
    std::string name;
    ExprPtr init;  // null for a bare declaration
};
struct GlobalDeclStmt {
    std::string name;
    ExprPtr init;  // null for a bare declaration
};
struct SuperAssignStmt {
    std::string name;
    ExprPtr value;
};
struct RoutineDefStmt {
    std::string name;
    std::vector<Param> params;
    std::vector<StmtPtr> body;
};
struct CallStmt {
    ExprPtr call;  // always holds a CallExpr
};
struct PrintStmt {
    std::vector<ExprPtr> args;
};
struct InspectStmt {};
struct ReturnStmt {
    ExprPtr value;  // null for a bare `return;`
};

struct Stmt {
    int line = 0;
    std::variant<LetStmt, LocalDeclStmt, GlobalDeclStmt, SuperAssignStmt, RoutineDefStmt,
                 CallStmt, PrintStmt, InspectStmt, ReturnStmt>
        node;
};

struct Program {
    std::vector<StmtPtr> statements;
};

// Structural comparison; source lines are ignored.
bool expr_equal(const Expr& a, const Expr& b);

}  // namespace slx
