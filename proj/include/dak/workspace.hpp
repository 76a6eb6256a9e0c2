#ifndef DAK_WORKSPACE_HPP
#define DAK_WORKSPACE_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <new>
#include <string>
#include <vector>

namespace dak {

// Process-global byte meter for algorithm-internal allocations. Workspace
// follows the convention of the benchmark: peak space minus the space of
// the inputs (T^cat, SA) and the output (DA). Inputs and outputs live in
// ordinary containers; everything an algorithm allocates for itself goes
// through metered_vector, so the meter sees exactly the workspace.
//
// Reset the meter before a measured region; at region end `live_bytes()`
// is back at zero when the algorithm released all scratch.
class WorkspaceMeter {
public:
    struct Exclusion {
        std::string name;
        std::uint64_t bytes;
    };

    static WorkspaceMeter& instance() noexcept;

    void reset() noexcept;

    void charge(std::size_t bytes) noexcept {
        const std::int64_t now = live_.fetch_add(static_cast<std::int64_t>(bytes),
                                                 std::memory_order_relaxed) +
                                 static_cast<std::int64_t>(bytes);
        std::int64_t seen = peak_.load(std::memory_order_relaxed);
        while (now > seen && !peak_.compare_exchange_weak(seen, now, std::memory_order_relaxed)) {
        }
    }

    void discharge(std::size_t bytes) noexcept {
        live_.fetch_sub(static_cast<std::int64_t>(bytes), std::memory_order_relaxed);
    }

    std::int64_t live_bytes() const noexcept { return live_.load(std::memory_order_relaxed); }
    std::uint64_t peak_bytes() const noexcept {
        const std::int64_t p = peak_.load(std::memory_order_relaxed);
        return p > 0 ? static_cast<std::uint64_t>(p) : 0;
    }

    // Records an input/output buffer that is deliberately not counted, for
    // the benchmark report.
    void note_exclusion(std::string name, std::uint64_t bytes);
    const std::vector<Exclusion>& exclusions() const noexcept { return exclusions_; }

private:
    WorkspaceMeter() = default;

    std::atomic<std::int64_t> live_{0};
    std::atomic<std::int64_t> peak_{0};
    std::vector<Exclusion> exclusions_;
};

// Allocator that routes through the global meter. Stateless; all instances
// are interchangeable.
template <class T>
struct MeteredAllocator {
    using value_type = T;

    MeteredAllocator() noexcept = default;
    template <class U>
    MeteredAllocator(const MeteredAllocator<U>&) noexcept {}

    T* allocate(std::size_t n) {
        WorkspaceMeter::instance().charge(n * sizeof(T));
        return static_cast<T*>(::operator new(n * sizeof(T)));
    }

    void deallocate(T* p, std::size_t n) noexcept {
        ::operator delete(p);
        WorkspaceMeter::instance().discharge(n * sizeof(T));
    }

    friend bool operator==(const MeteredAllocator&, const MeteredAllocator&) { return true; }
};

template <class T>
using metered_vector = std::vector<T, MeteredAllocator<T>>;

} // namespace dak

#endif // DAK_WORKSPACE_HPP
