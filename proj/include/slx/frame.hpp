#pragma once

#include <map>
#include <memory>
#include <string>

#include "slx/value.hpp"

namespace slx {

enum class FrameKind { Global, Local };

// One scope. A frame carries both chain links; the active discipline
// decides which link resolution and assignment walk. The global frame is
// the terminator of both chains and the only frame without parents.
struct Frame {
    Frame(int id, std::string label, FrameKind kind);
    ~Frame();
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

    int id;
    std::string label;  // GLOBAL, or the routine name uppercased
    FrameKind kind;
    std::map<std::string, Value> bindings;
    std::shared_ptr<Frame> lexical_parent;  // null only for the global frame
    std::shared_ptr<Frame> dynamic_caller;  // null only for the global frame

    static std::shared_ptr<Frame> make_global();

    // Number of frames currently alive across the process; lets tests
    // check that runs tear every local frame down.
    static long live_count();
};

}  // namespace slx
