#pragma once

#include <atomic>
#include <cstdint>

namespace cmlocus {

/// Cooperative limit on the number of S-pair / division reductions performed
/// by the Gröbner engines. A budget is installed per thread with BudgetScope;
/// the engines call charge_reduction() and throw ErrorCode::BudgetExceeded
/// once the limit is crossed. Several threads may share one StepBudget.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t max_steps) : max_steps_(max_steps) {}
  StepBudget(const StepBudget&) = delete;
  StepBudget& operator=(const StepBudget&) = delete;

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return max_steps_; }

 private:
  std::uint64_t max_steps_;
  std::atomic<std::uint64_t> used_{0};
};

class BudgetScope {
 public:
  explicit BudgetScope(StepBudget* budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

  static StepBudget* current();

 private:
  StepBudget* previous_;
};

/// Charges one reduction against the current thread's budget, if any.
void charge_reduction();

}  // namespace cmlocus
