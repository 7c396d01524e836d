#ifndef NILGROWTH_EXPLORE_HPP
#define NILGROWTH_EXPLORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/convex_body.hpp"
#include "nilgrowth/lattice.hpp"

namespace nilgrowth {

/// Per-scale record of the chain Lambda_n = span_Z(L cap K_n), the scales
/// where it strictly grows, and the theorem ceiling d+1+sum floor(log2 l!).
struct ExplorationReport {
  size_t ambient_dim = 0;
  std::vector<std::string> scale_labels;
  std::vector<IntegerLattice> chain;
  std::vector<size_t> change_scales;               // 0-based body indices
  std::vector<std::optional<Int>> change_indices;  // [new : old], nullopt = rank jump
  size_t change_count = 0;
  size_t bound = 0;
  bool bound_ok = false;
};

/// floor(log2 n!) for the bound.
size_t floor_log2_factorial(size_t n);
size_t exploration_bound(size_t dim);

/// Explores the lattice with a weakly nested body sequence (nesting is
/// verified exactly; violation is a usage error). The chain starts from the
/// zero lattice, so capturing anything at the first body counts as a change.
ExplorationReport explore(const IntegerLattice& lattice,
                          const std::vector<ConvexBody>& bodies,
                          const Budget& budget = Budget::with_env());

}  // namespace nilgrowth

#endif
