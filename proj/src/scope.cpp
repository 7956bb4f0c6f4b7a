#include "slx/scope.hpp"

#include <cassert>
#include <cctype>

#include "slx/errors.hpp"

namespace slx {

namespace {

const std::shared_ptr<Frame>& next_in_chain(const std::shared_ptr<Frame>& frame,
                                            Discipline discipline) {
    return discipline == Discipline::Dynamic ? frame->dynamic_caller : frame->lexical_parent;
}

std::string searched_list(const std::vector<ResolveMiss>& misses) {
    std::string out;
    for (const ResolveMiss& m : misses) {
        if (!out.empty()) out += ", ";
        out += m.label;
    }
    return out;
}

}  // namespace

Resolution resolve(const std::string& name, const std::shared_ptr<Frame>& current,
                   Discipline discipline) {
    std::vector<ResolveMiss> misses;
    for (std::shared_ptr<Frame> frame = current; frame; frame = next_in_chain(frame, discipline)) {
        auto it = frame->bindings.find(name);
        if (it != frame->bindings.end()) {
            return Resolution{it->second, frame->id, frame->label, std::move(misses)};
        }
        misses.push_back({frame->id, frame->label});
    }
    throw SlxError(ErrorKind::UnboundVariable,
                   "unbound variable '" + name + "' (searched " + searched_list(misses) + ")");
}

int bind_let(const std::string& name, Value value, const std::shared_ptr<Frame>& current,
             Discipline discipline) {
    assert(!std::holds_alternative<PromiseValue>(value));
    if (discipline == Discipline::Dynamic) {
        // Rebind where found: the nearest caller (or global) binding wins;
        // only a miss everywhere creates a fresh local binding.
        for (std::shared_ptr<Frame> frame = current; frame; frame = frame->dynamic_caller) {
            auto it = frame->bindings.find(name);
            if (it != frame->bindings.end()) {
                it->second = std::move(value);
                return frame->id;
            }
        }
    }
    current->bindings[name] = std::move(value);
    return current->id;
}

void declare_scoped(const std::string& name, std::optional<Value> init,
                    const std::shared_ptr<Frame>& current, const std::shared_ptr<Frame>& global,
                    ScopeTarget target) {
    if (target == ScopeTarget::Local) {
        if (current->kind != FrameKind::Local) {
            throw SlxError(ErrorKind::ScopeDeclError, "'local' declaration outside a routine");
        }
        // An existing local binding is left untouched, initializer or not.
        if (current->bindings.find(name) == current->bindings.end()) {
            current->bindings[name] = init ? std::move(*init) : Value{Unset{}};
        }
        return;
    }
    if (init) {
        global->bindings[name] = std::move(*init);
    } else if (global->bindings.find(name) == global->bindings.end()) {
        global->bindings[name] = Unset{};
    }
}

int super_assign(const std::string& name, Value value, const std::shared_ptr<Frame>& current,
                 const std::shared_ptr<Frame>& global) {
    for (std::shared_ptr<Frame> frame = current->lexical_parent; frame;
         frame = frame->lexical_parent) {
        auto it = frame->bindings.find(name);
        if (it != frame->bindings.end()) {
            it->second = std::move(value);
            return frame->id;
        }
    }
    global->bindings[name] = std::move(value);
    return global->id;
}

std::shared_ptr<Frame> new_frame(const std::string& routine_name, int id,
                                 std::shared_ptr<Frame> lexical_parent,
                                 std::shared_ptr<Frame> dynamic_caller) {
    assert(lexical_parent && dynamic_caller);
    std::string label;
    label.reserve(routine_name.size());
    for (char c : routine_name) {
        label += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    auto frame = std::make_shared<Frame>(id, std::move(label), FrameKind::Local);
    frame->lexical_parent = std::move(lexical_parent);
    frame->dynamic_caller = std::move(dynamic_caller);
    return frame;
}

}  // namespace slx
