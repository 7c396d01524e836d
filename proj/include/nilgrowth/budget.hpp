#ifndef NILGROWTH_BUDGET_HPP
#define NILGROWTH_BUDGET_HPP

#include <cstdint>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

/// Hard ceilings for enumerations. Exceeding one raises resource_error,
/// never a silent truncation.
struct Budget {
  std::uint64_t points = 10'000'000;    // candidate lattice points per query
  std::uint64_t elements = 10'000'000;  // group elements per ball/closure
  std::uint64_t cosets = 100'000;       // coset table size

  /// points ceiling with the NILGROWTH_BUDGET_POINTS env override applied.
  static Budget with_env();
};

class BudgetMeter {
 public:
  BudgetMeter(std::uint64_t limit, const char* what)
      : limit_(limit), what_(what) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_)
      throw resource_error(std::string(what_) + " budget exceeded (limit " +
                           std::to_string(limit_) + ")");
  }

  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char* what_;
};

}  // namespace nilgrowth

#endif
