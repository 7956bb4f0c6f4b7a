#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slx/ast.hpp"
#include "slx/errors.hpp"
#include "slx/scope.hpp"

namespace slx {

enum class DefaultsMode { Eager, Lazy };

struct RunConfig {
    Discipline discipline = Discipline::Dynamic;
    DefaultsMode defaults = DefaultsMode::Eager;
    bool trace = false;
    int max_call_depth = 1000;  // active frames, the global one included
};

struct MachineState {
    std::shared_ptr<Frame> global;
    std::vector<std::shared_ptr<Frame>> stack;  // stack[0] is the global frame
    RunConfig config;
    std::vector<std::string> stdout_lines;
    std::vector<std::string> trace_lines;
    std::set<std::pair<int, std::string>> forcing;  // (frame id, name) mid-force
    int next_frame_id = 1;
};

struct RunError {
    ErrorKind kind;
    std::string message;
    int line = 0;
};

struct RunOutcome {
    std::vector<std::string> stdout_lines;
    // Global bindings at end of run (or at failure), rendered as text and
    // sorted by name. Routine bindings appear as <routine:NAME>.
    std::vector<std::pair<std::string, std::string>> final_globals;
    std::optional<RunError> error;
    std::vector<std::string> trace_lines;
};

class Interpreter {
public:
    explicit Interpreter(const RunConfig& config);

    // Runs every top-level statement against the global frame. Throws
    // SlxError on the first failure; frames unwind either way.
    void exec_program(const Program& program);

    // Statement and expression engines. `env` is the frame the code runs
    // in: the stack top during normal execution, the owner frame while a
    // promise is being forced. Returns the routine result when the
    // statement signalled `return`.
    std::optional<std::int64_t> exec_stmt(const Stmt& stmt, const std::shared_ptr<Frame>& env);
    std::int64_t eval_expr(const Expr& expr, const std::shared_ptr<Frame>& env);
    std::int64_t call_routine(const std::string& name, const std::vector<ExprPtr>& args,
                              const std::shared_ptr<Frame>& env, int line);
    std::int64_t force_promise(const PromiseValue& promise, int line);

    MachineState& state() { return state_; }
    const MachineState& state() const { return state_; }

private:
    std::optional<std::int64_t> exec_body(const std::vector<StmtPtr>& body,
                                          const std::shared_ptr<Frame>& env);
    Resolution resolve_var(const std::string& name, const std::shared_ptr<Frame>& env, int line);

    MachineState state_;
};

// Tokenize, parse, and execute `source` against a fresh machine. Never
// throws on program input: failures land in RunOutcome::error, with
// everything printed before the failure kept. Deterministic for a fixed
// (source, config) pair.
RunOutcome run_program(std::string_view source, const RunConfig& config = {});

}  // namespace slx
