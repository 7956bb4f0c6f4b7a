#include "slx/render.hpp"

namespace slx {

namespace {

// Binding strength: additive 1, multiplicative 2, unary minus 3, atoms 4.
int precedence(BinOpKind op) {
    return (op == BinOpKind::Mul || op == BinOpKind::Div) ? 2 : 1;
}

void render_into(const Expr& expr, std::string& out, int min_prec) {
    if (const auto* lit = std::get_if<IntLit>(&expr.node)) {
        out += std::to_string(lit->value);
        return;
    }
    if (const auto* var = std::get_if<VarRef>(&expr.node)) {
        out += var->name;
        return;
    }
    if (const auto* call = std::get_if<CallExpr>(&expr.node)) {
        out += call->callee;
        out += '(';
        for (std::size_t i = 0; i < call->args.size(); ++i) {
            if (i > 0) out += ", ";
            render_into(*call->args[i], out, 1);
        }
        out += ')';
        return;
    }
    if (const auto* neg = std::get_if<Neg>(&expr.node)) {
        bool parens = 3 < min_prec;
        if (parens) out += '(';
        out += '-';
        render_into(*neg->operand, out, 3);
        if (parens) out += ')';
        return;
    }
    const auto& bin = std::get<BinOp>(expr.node);
    int prec = precedence(bin.op);
    bool parens = prec < min_prec;
    if (parens) out += '(';
    render_into(*bin.lhs, out, prec);
    out += ' ';
    out += bin_op_symbol(bin.op);
    out += ' ';
    // Left-associative grammar: an equal-precedence right child needs parens.
    render_into(*bin.rhs, out, prec + 1);
    if (parens) out += ')';
}

}  // namespace

std::string render_expr(const Expr& expr) {
    std::string out;
    render_into(expr, out, 1);
    return out;
}

}  // namespace slx
