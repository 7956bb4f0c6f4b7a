#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slx/frame.hpp"

namespace slx {

struct ResolveMiss {
    int frame_id;
    std::string label;
};

struct Resolution {
    Value value;  // copy of the hit binding; promises are returned as-is
    int frame_id;
    std::string frame_label;
    std::vector<ResolveMiss> misses;  // frames searched before the hit
};

// First hit along the discipline's chain: the caller chain under Dynamic,
// the definition-site chain under Lexical; both end at the global frame.
// Throws UnboundVariable (message lists the searched frames) when the
// chain is exhausted.
Resolution resolve(const std::string& name, const std::shared_ptr<Frame>& current,
                   Discipline discipline);

// `let`. Dynamic: rebind the nearest existing binding up the caller
// chain, else create in `current`. Lexical: always write `current`.
// Returns the id of the frame written. `value` must not be a promise.
int bind_let(const std::string& name, Value value, const std::shared_ptr<Frame>& current,
             Discipline discipline);

enum class ScopeTarget { Local, Global };

// `local` / `global` declarations. Local requires a local current frame
// (throws ScopeDeclError otherwise) and never clobbers an existing local
// binding. Global with an initializer always writes the global frame;
// without one it only fills a missing binding with Unset.
void declare_scoped(const std::string& name, std::optional<Value> init,
                    const std::shared_ptr<Frame>& current, const std::shared_ptr<Frame>& global,
                    ScopeTarget target);

// `<<=`. Searches from the lexical parent (the current frame is skipped),
// rebinding the first existing binding; creates the binding in the global
// frame when no enclosing frame has one. Returns the frame id written.
int super_assign(const std::string& name, Value value, const std::shared_ptr<Frame>& current,
                 const std::shared_ptr<Frame>& global);

// Fresh local frame for a routine call: label is the routine name
// uppercased, both links must be live frames, `id` must exceed every id
// handed out earlier in the run.
std::shared_ptr<Frame> new_frame(const std::string& routine_name, int id,
                                 std::shared_ptr<Frame> lexical_parent,
                                 std::shared_ptr<Frame> dynamic_caller);

}  // namespace slx
