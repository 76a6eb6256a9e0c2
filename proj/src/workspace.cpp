#include "dak/workspace.hpp"

#include <utility>

namespace dak {

WorkspaceMeter& WorkspaceMeter::instance() noexcept {
    static WorkspaceMeter meter;
    return meter;
}

void WorkspaceMeter::reset() noexcept {
    live_.store(0, std::memory_order_relaxed);
    peak_.store(0, std::memory_order_relaxed);
    exclusions_.clear();
}

void WorkspaceMeter::note_exclusion(std::string name, std::uint64_t bytes) {
    exclusions_.push_back({std::move(name), bytes});
}

} // namespace dak
