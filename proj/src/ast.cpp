#include "slx/ast.hpp"

namespace slx {

char bin_op_symbol(BinOpKind op) {
    switch (op) {
        case BinOpKind::Add: return '+';
        case BinOpKind::Sub: return '-';
        case BinOpKind::Mul: return '*';
        case BinOpKind::Div: return '/';
    }
    return '?';
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* ia = std::get_if<IntLit>(&a.node)) {
        return ia->value == std::get<IntLit>(b.node).value;
    }
    if (const auto* va = std::get_if<VarRef>(&a.node)) {
        return va->name == std::get<VarRef>(b.node).name;
    }
    if (const auto* ba = std::get_if<BinOp>(&a.node)) {
        const auto& bb = std::get<BinOp>(b.node);
        return ba->op == bb.op && expr_equal(*ba->lhs, *bb.lhs) && expr_equal(*ba->rhs, *bb.rhs);
    }
    if (const auto* na = std::get_if<Neg>(&a.node)) {
        return expr_equal(*na->operand, *std::get<Neg>(b.node).operand);
    }
    const auto& ca = std::get<CallExpr>(a.node);
    const auto& cb = std::get<CallExpr>(b.node);
    if (ca.callee != cb.callee || ca.args.size() != cb.args.size()) return false;
    for (std::size_t i = 0; i < ca.args.size(); ++i) {
        if (!expr_equal(*ca.args[i], *cb.args[i])) return false;
    }
    return true;
}

}  // namespace slx
