#pragma once

#include <cstdint>
#include <string>

namespace skein {

// Per-thread step counter for rewriting and trace work. Exceeding the
// limit throws BudgetExhausted instead of running unbounded.
class StepBudget {
public:
  static constexpr std::uint64_t kDefaultLimit = 200'000'000;

  explicit StepBudget(std::uint64_t limit = kDefaultLimit, std::string context = {});
  ~StepBudget();
  StepBudget(const StepBudget&) = delete;
  StepBudget& operator=(const StepBudget&) = delete;

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

  // Charges the active budget of this thread, if any.
  static void charge(std::uint64_t steps = 1);

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string context_;
  StepBudget* previous_;
};

// Default limit: SKEIN_BUDGET if set and valid, else kDefaultLimit.
std::uint64_t default_budget();

}  // namespace skein
