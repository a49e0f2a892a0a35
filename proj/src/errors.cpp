#include "cmlocus/errors.hpp"

#include "cmlocus/budget.hpp"

namespace cmlocus {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::UndefinedName: return "undefined-name";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::RingMismatch: return "ring-mismatch";
    case ErrorCode::RankMismatch: return "rank-mismatch";
    case ErrorCode::UnknownVariable: return "unknown-variable";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ImageNotContained: return "image-not-contained";
    case ErrorCode::NotInSupport: return "not-in-support";
    case ErrorCode::ZeroModule: return "zero-module";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
  }
  return "error";
}

namespace {
thread_local StepBudget* current_budget = nullptr;
}

void StepBudget::charge(std::uint64_t steps) {
  auto used = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
  if (used > max_steps_) {
    throw Error(ErrorCode::BudgetExceeded,
                "reduction budget of " + std::to_string(max_steps_) + " steps exceeded");
  }
}

BudgetScope::BudgetScope(StepBudget* budget) : previous_(current_budget) { current_budget = budget; }
BudgetScope::~BudgetScope() { current_budget = previous_; }
StepBudget* BudgetScope::current() { return current_budget; }

void charge_reduction() {
  if (current_budget != nullptr) current_budget->charge();
}

}  // namespace cmlocus
