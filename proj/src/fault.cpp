#include "minrep/fault.hpp"

#include <atomic>

namespace minrep {

namespace {
std::atomic<Fault> g_fault{Fault::kNone};
}

void set_fault(Fault f) { g_fault.store(f, std::memory_order_relaxed); }
Fault active_fault() { return g_fault.load(std::memory_order_relaxed); }

} // namespace minrep
