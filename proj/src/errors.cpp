#include "diffusion/errors.hpp"

namespace diffusion {

SizeMismatch::SizeMismatch(std::size_t expected, std::size_t actual)
    : InputError("stacks: expected " + std::to_string(expected) + " entries (one per vertex), got " +
                 std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

NoRepeatWithinBudget::NoRepeatWithinBudget(std::size_t budget)
    : Error("no configuration repeated within " + std::to_string(budget) + " steps"), budget_(budget) {}

PeriodNotOneOrTwo::PeriodNotOneOrTwo(std::size_t period, std::size_t preperiod)
    : Error("detected period " + std::to_string(period) + " after preperiod " + std::to_string(preperiod) +
            "; periods must be 1 or 2"),
      period_(period) {}

CapExceeded::CapExceeded(std::size_t n, std::size_t cap)
    : Error("n = " + std::to_string(n) + " exceeds the brute-force cap of " + std::to_string(cap)) {}

}  // namespace diffusion
