#include <atomic>

#include "sclab/common.hpp"

namespace sclab {

namespace {
std::atomic<std::uint64_t> g_term_budget{0};
}

std::uint64_t TermBudget::get() { return g_term_budget.load(std::memory_order_relaxed); }

void TermBudget::set(std::uint64_t cap) { g_term_budget.store(cap, std::memory_order_relaxed); }

void TermBudget::check(std::uint64_t candidate_size) {
  std::uint64_t cap = get();
  if (cap != 0 && candidate_size > cap) {
    fail(ErrKind::BudgetExceeded,
         "polynomial term budget exceeded: " + std::to_string(candidate_size) + " > " + std::to_string(cap));
  }
}

}  // namespace sclab
