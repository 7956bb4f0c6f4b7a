#include "slx/frame.hpp"

#include <atomic>

namespace slx {

namespace {
std::atomic<long> g_live_frames{0};
}

Frame::Frame(int id, std::string label, FrameKind kind)
    : id(id), label(std::move(label)), kind(kind) {
    g_live_frames.fetch_add(1, std::memory_order_relaxed);
}

Frame::~Frame() {
    g_live_frames.fetch_sub(1, std::memory_order_relaxed);
}

std::shared_ptr<Frame> Frame::make_global() {
    return std::make_shared<Frame>(0, "GLOBAL", FrameKind::Global);
}

long Frame::live_count() {
    return g_live_frames.load(std::memory_order_relaxed);
}

}  // namespace slx
