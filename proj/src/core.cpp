#include "wf/core.hpp"

#include <cstdlib>
#include <string>

namespace wf {

namespace {

#ifdef NDEBUG
constexpr bool kValidateByDefault = false;
#else
constexpr bool kValidateByDefault = true;
#endif

std::atomic<bool> g_validate{kValidateByDefault};

std::size_t initial_depth_budget() {
  if (const char* env = std::getenv("WFREC_DEPTH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

std::atomic<std::size_t> g_depth_budget{initial_depth_budget()};
thread_local std::size_t t_depth = 0;

}  // namespace

bool evidence_validation() noexcept { return g_validate.load(std::memory_order_relaxed); }
void set_evidence_validation(bool on) noexcept { g_validate.store(on, std::memory_order_relaxed); }

std::size_t depth_budget() noexcept { return g_depth_budget.load(std::memory_order_relaxed); }
void set_depth_budget(std::size_t budget) noexcept {
  g_depth_budget.store(budget, std::memory_order_relaxed);
}

namespace detail {

DepthGuard::DepthGuard() {
  if (t_depth >= depth_budget()) {
    throw DepthBudgetExceeded("wfrec recursion depth budget of " + std::to_string(depth_budget()) +
                              " exhausted");
  }
  ++t_depth;
}

DepthGuard::~DepthGuard() { --t_depth; }

}  // namespace detail

}  // namespace wf
