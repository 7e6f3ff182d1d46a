#include "skein/budget.hpp"

#include <cstdlib>
#include <string>

#include "skein/error.hpp"

namespace skein {

namespace {
thread_local StepBudget* active = nullptr;
}

StepBudget::StepBudget(std::uint64_t limit, std::string context)
    : limit_(limit), context_(std::move(context)), previous_(active) {
  active = this;
}

StepBudget::~StepBudget() { active = previous_; }

void StepBudget::charge(std::uint64_t steps) {
  StepBudget* b = active;
  if (!b) return;
  b->used_ += steps;
  if (b->used_ > b->limit_) {
    b->used_ = b->limit_;
    throw BudgetExhausted(b->context_);
  }
}

std::uint64_t default_budget() {
  const char* env = std::getenv("SKEIN_BUDGET");
  if (!env || !*env) return StepBudget::kDefaultLimit;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(env, &pos);
    if (pos == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("SKEIN_BUDGET must be a positive integer, got '") + env + "'");
}

}  // namespace skein
