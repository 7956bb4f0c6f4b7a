#include "slx/interpreter.hpp"

#include <cassert>
#include <limits>
#include <utility>

#include "slx/inspector.hpp"
#include "slx/parser.hpp"

namespace slx {

namespace {

// Stamps the statement/expression line onto errors raised by the scope
// layer (which has no source positions of its own).
template <typename Fn>
decltype(auto) with_line(int line, Fn&& fn) {
    try {
        return fn();
    } catch (SlxError& e) {
        if (e.line == 0) e.line = line;
        throw;
    }
}

std::int64_t checked_arith(BinOpKind op, std::int64_t lhs, std::int64_t rhs, int line) {
    std::int64_t result = 0;
    switch (op) {
        case BinOpKind::Add:
            if (__builtin_add_overflow(lhs, rhs, &result)) {
                throw SlxError(ErrorKind::ArithmeticOverflow, "arithmetic overflow", line);
            }
            return result;
        case BinOpKind::Sub:
            if (__builtin_sub_overflow(lhs, rhs, &result)) {
                throw SlxError(ErrorKind::ArithmeticOverflow, "arithmetic overflow", line);
            }
            return result;
        case BinOpKind::Mul:
            if (__builtin_mul_overflow(lhs, rhs, &result)) {
                throw SlxError(ErrorKind::ArithmeticOverflow, "arithmetic overflow", line);
            }
            return result;
        case BinOpKind::Div:
            if (rhs == 0) {
                throw SlxError(ErrorKind::DivisionByZero, "division by zero", line);
            }
            if (lhs == std::numeric_limits<std::int64_t>::min() && rhs == -1) {
                throw SlxError(ErrorKind::ArithmeticOverflow, "arithmetic overflow", line);
            }
            return lhs / rhs;  // truncates toward zero
    }
    return result;
}

struct FrameGuard {
    MachineState& state;
    FrameGuard(MachineState& state, std::shared_ptr<Frame> frame) : state(state) {
        state.stack.push_back(std::move(frame));
    }
    ~FrameGuard() { state.stack.pop_back(); }
};

struct ForcingGuard {
    MachineState& state;
    std::pair<int, std::string> key;
    ForcingGuard(MachineState& state, std::pair<int, std::string> key)
        : state(state), key(std::move(key)) {
        state.forcing.insert(this->key);
    }
    ~ForcingGuard() { state.forcing.erase(key); }
};

}  // namespace

Interpreter::Interpreter(const RunConfig& config) {
    state_.config = config;
    state_.global = Frame::make_global();
    state_.stack.push_back(state_.global);
    state_.next_frame_id = 1;
}

void Interpreter::exec_program(const Program& program) {
    for (const StmtPtr& stmt : program.statements) {
        auto signal = exec_stmt(*stmt, state_.global);
        assert(!signal && "return at top level is rejected by the parser");
        (void)signal;
    }
}

Resolution Interpreter::resolve_var(const std::string& name, const std::shared_ptr<Frame>& env,
                                    int line) {
    Resolution res = with_line(line, [&] { return resolve(name, env, state_.config.discipline); });
    if (state_.config.trace) {
        std::string entry = "resolve " + name + " [" +
                            std::string(discipline_name(state_.config.discipline)) + "]: ";
        for (const ResolveMiss& miss : res.misses) {
            entry += "miss " + miss.label + ", ";
        }
        entry += "hit " + res.frame_label + " = " + value_text(res.value);
        state_.trace_lines.push_back(std::move(entry));
    }
    return res;
}

std::int64_t Interpreter::eval_expr(const Expr& expr, const std::shared_ptr<Frame>& env) {
    if (const auto* lit = std::get_if<IntLit>(&expr.node)) {
        return lit->value;
    }
    if (const auto* var = std::get_if<VarRef>(&expr.node)) {
        Resolution res = resolve_var(var->name, env, expr.line);
        if (const auto* n = std::get_if<std::int64_t>(&res.value)) return *n;
        if (const auto* promise = std::get_if<PromiseValue>(&res.value)) {
            return force_promise(*promise, expr.line);
        }
        if (std::holds_alternative<Unset>(res.value)) {
            throw SlxError(ErrorKind::UnsetRead,
                           "variable '" + var->name + "' read before assignment", expr.line);
        }
        throw SlxError(ErrorKind::TypeMismatch, "routine '" + var->name + "' used as value",
                       expr.line);
    }
    if (const auto* bin = std::get_if<BinOp>(&expr.node)) {
        std::int64_t lhs = eval_expr(*bin->lhs, env);
        std::int64_t rhs = eval_expr(*bin->rhs, env);
        return checked_arith(bin->op, lhs, rhs, expr.line);
    }
    if (const auto* neg = std::get_if<Neg>(&expr.node)) {
        std::int64_t operand = eval_expr(*neg->operand, env);
        std::int64_t result = 0;
        if (__builtin_sub_overflow(std::int64_t{0}, operand, &result)) {
            throw SlxError(ErrorKind::ArithmeticOverflow, "arithmetic overflow", expr.line);
        }
        return result;
    }
    const auto& call = std::get<CallExpr>(expr.node);
    return call_routine(call.callee, call.args, env, expr.line);
}

std::int64_t Interpreter::call_routine(const std::string& name, const std::vector<ExprPtr>& args,
                                       const std::shared_ptr<Frame>& env, int line) {
    Resolution res = with_line(line, [&] { return resolve(name, env, state_.config.discipline); });
    const auto* routine = std::get_if<RoutineValue>(&res.value);
    if (routine == nullptr) {
        throw SlxError(ErrorKind::NotARoutine, "'" + name + "' is not a routine", line);
    }
    const RoutineDefStmt& def = *routine->def;
    if (args.size() > def.params.size()) {
        throw SlxError(ErrorKind::ArityError,
                       "routine '" + name + "' takes " + std::to_string(def.params.size()) +
                           " parameter(s), got " + std::to_string(args.size()),
                       line);
    }

    // Positional arguments are eager and evaluate at the call site.
    std::vector<std::int64_t> arg_values;
    arg_values.reserve(args.size());
    for (const ExprPtr& arg : args) {
        arg_values.push_back(eval_expr(*arg, env));
    }

    if (static_cast<int>(state_.stack.size()) + 1 > state_.config.max_call_depth) {
        throw SlxError(ErrorKind::CallDepthExceeded,
                       "call depth limit " + std::to_string(state_.config.max_call_depth) +
                           " exceeded",
                       line);
    }

    std::shared_ptr<Frame> lexical_parent = state_.global;
    if (state_.config.discipline == Discipline::Lexical) {
        lexical_parent = routine->captured_env.lock();
        assert(lexical_parent && "definition frame outlives every resolvable routine");
    }
    std::shared_ptr<Frame> frame =
        new_frame(routine->name, state_.next_frame_id++, std::move(lexical_parent), env);
    FrameGuard guard(state_, frame);

    for (std::size_t i = 0; i < def.params.size(); ++i) {
        const Param& param = def.params[i];
        if (i < arg_values.size()) {
            frame->bindings[param.name] = arg_values[i];
        } else if (param.default_expr) {
            if (state_.config.defaults == DefaultsMode::Eager) {
                // Evaluated in the callee frame, so earlier parameters are
                // already visible to later defaults.
                frame->bindings[param.name] = eval_expr(*param.default_expr, frame);
            } else {
                frame->bindings[param.name] =
                    PromiseValue{param.name, param.default_expr.get(), frame, frame->id};
            }
        } else {
            frame->bindings[param.name] = Unset{};
        }
    }

    auto signal = exec_body(def.body, frame);
    return signal ? *signal : 0;
}

std::int64_t Interpreter::force_promise(const PromiseValue& promise, int line) {
    std::pair<int, std::string> key{promise.owner_id, promise.param};
    if (state_.forcing.count(key) != 0) {
        throw SlxError(ErrorKind::PromiseCycle,
                       "cycle while forcing default for parameter '" + promise.param + "'", line);
    }
    std::shared_ptr<Frame> owner = promise.owner.lock();
    assert(owner && "a promise is only reachable while its owner frame is live");
    ForcingGuard guard(state_, std::move(key));
    // Evaluated at reference time in the owner frame; the result is not
    // written back, so every reference re-evaluates.
    return eval_expr(*promise.expr, owner);
}

std::optional<std::int64_t> Interpreter::exec_body(const std::vector<StmtPtr>& body,
                                                   const std::shared_ptr<Frame>& env) {
    for (const StmtPtr& stmt : body) {
        auto signal = exec_stmt(*stmt, env);
        if (signal) return signal;
    }
    return std::nullopt;
}

std::optional<std::int64_t> Interpreter::exec_stmt(const Stmt& stmt,
                                                   const std::shared_ptr<Frame>& env) {
    if (const auto* let = std::get_if<LetStmt>(&stmt.node)) {
        Value value = eval_expr(*let->value, env);
        with_line(stmt.line,
                  [&] { bind_let(let->name, std::move(value), env, state_.config.discipline); });
        return std::nullopt;
    }
    if (const auto* decl = std::get_if<LocalDeclStmt>(&stmt.node)) {
        std::optional<Value> init;
        if (decl->init) init = Value{eval_expr(*decl->init, env)};
        with_line(stmt.line, [&] {
            declare_scoped(decl->name, std::move(init), env, state_.global, ScopeTarget::Local);
        });
        return std::nullopt;
    }
    if (const auto* decl = std::get_if<GlobalDeclStmt>(&stmt.node)) {
        std::optional<Value> init;
        if (decl->init) init = Value{eval_expr(*decl->init, env)};
        with_line(stmt.line, [&] {
            declare_scoped(decl->name, std::move(init), env, state_.global, ScopeTarget::Global);
        });
        return std::nullopt;
    }
    if (const auto* super = std::get_if<SuperAssignStmt>(&stmt.node)) {
        if (state_.config.discipline != Discipline::Lexical) {
            throw SlxError(ErrorKind::DisciplineError,
                           "super-assignment requires lexical discipline", stmt.line);
        }
        Value value = eval_expr(*super->value, env);
        super_assign(super->name, std::move(value), env, state_.global);
        return std::nullopt;
    }
    if (const auto* def = std::get_if<RoutineDefStmt>(&stmt.node)) {
        RoutineValue routine;
        routine.name = def->name;
        routine.def = def;
        if (state_.config.discipline == Discipline::Lexical) {
            routine.captured_env = env;
            routine.has_captured_env = true;
        }
        // A definition binds where it is written, in both disciplines.
        env->bindings[def->name] = std::move(routine);
        return std::nullopt;
    }
    if (const auto* call = std::get_if<CallStmt>(&stmt.node)) {
        eval_expr(*call->call, env);
        return std::nullopt;
    }
    if (const auto* print = std::get_if<PrintStmt>(&stmt.node)) {
        std::string out;
        for (std::size_t i = 0; i < print->args.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(eval_expr(*print->args[i], env));
        }
        state_.stdout_lines.push_back(std::move(out));
        return std::nullopt;
    }
    if (std::holds_alternative<InspectStmt>(stmt.node)) {
        for (const ScopeRecord& record : snapshot_scopes(state_)) {
            state_.stdout_lines.push_back(record.scope + " " + record.name + " " +
                                          record.value_text);
        }
        return std::nullopt;
    }
    const auto& ret = std::get<ReturnStmt>(stmt.node);
    std::int64_t value = ret.value ? eval_expr(*ret.value, env) : 0;
    return value;
}

RunOutcome run_program(std::string_view source, const RunConfig& config) {
    RunOutcome outcome;
    Program program;  // owns the AST the machine points into
    Interpreter interp(config);
    try {
        program = parse_source(source);
        interp.exec_program(program);
    } catch (const SlxError& e) {
        outcome.error = RunError{e.kind, e.what(), e.line};
    }
    MachineState& state = interp.state();
    assert(state.stack.size() == 1 && "calls unwind even on error");
    outcome.stdout_lines = std::move(state.stdout_lines);
    outcome.trace_lines = std::move(state.trace_lines);
    for (const auto& [name, value] : state.global->bindings) {
        outcome.final_globals.emplace_back(name, value_text(value));
    }
    return outcome;
}

}  // namespace slx
