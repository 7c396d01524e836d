#include "nilgrowth/budget.hpp"

#include <cstdlib>
#include <string>

namespace nilgrowth {

Budget Budget::with_env() {
  Budget b;
  if (const char* env = std::getenv("NILGROWTH_BUDGET_POINTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.points = v;
  }
  return b;
}

}  // namespace nilgrowth
