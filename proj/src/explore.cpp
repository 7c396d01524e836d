#include "nilgrowth/explore.hpp"

#include "nilgrowth/errors.hpp"
#include "nilgrowth/lattice_points.hpp"

namespace nilgrowth {

size_t floor_log2_factorial(size_t n) {
  Int f(1);
  for (size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return mpz_sizeinbase(f.get_mpz_t(), 2) - 1;
}

size_t exploration_bound(size_t dim) {
  size_t b = dim + 1;
  for (size_t l = 1; l <= dim; ++l) b += floor_log2_factorial(l);
  return b;
}

ExplorationReport explore(const IntegerLattice& lattice,
                          const std::vector<ConvexBody>& bodies,
                          const Budget& budget) {
  ExplorationReport rep;
  rep.ambient_dim = lattice.ambient_dim();
  rep.bound = exploration_bound(rep.ambient_dim);

  for (size_t i = 0; i + 1 < bodies.size(); ++i)
    if (!bodies[i].subset_of(bodies[i + 1]))
      throw usage_error("bodies are not nested at position " +
                        std::to_string(i) + ": " + bodies[i].describe() +
                        " is not inside " + bodies[i + 1].describe());

  IntegerLattice prev = IntegerLattice::zero(rep.ambient_dim);
  for (size_t n = 0; n < bodies.size(); ++n) {
    const ConvexBody& body = bodies[n];
    if (body.dim() != rep.ambient_dim)
      throw usage_error("body dimension mismatch in exploration");
    BudgetMeter meter(budget.points, "exploration enumeration");
    SpanAccumulator acc(rep.ambient_dim);
    for (const RatVec& row : prev.basis_rows()) acc.add(row);
    // Only the shell beyond the previous body can extend the span, and the
    // walk stops once the span has saturated the whole lattice.
    const ConvexBody* inner = n > 0 ? &bodies[n - 1] : nullptr;
    bool saturated = acc.lattice() == lattice;
    if (!saturated)
      for_points_in_shell(lattice, body, inner, meter, [&](const RatVec& v) {
        if (acc.add(v) && acc.lattice() == lattice) return false;
        return true;
      });
    IntegerLattice cur = acc.lattice();
    rep.scale_labels.push_back(body.describe());
    if (cur != prev) {
      rep.change_scales.push_back(n);
      if (cur.rank() == prev.rank() && prev.rank() > 0) {
        LatticeIndex idx = lattice_index(prev, cur);
        rep.change_indices.push_back(idx.finite ? std::optional<Int>(idx.value)
                                                : std::nullopt);
      } else {
        rep.change_indices.push_back(std::nullopt);
      }
    }
    rep.chain.push_back(cur);
    prev = std::move(cur);
  }
  rep.change_count = rep.change_scales.size();
  rep.bound_ok = rep.change_count <= rep.bound;
  return rep;
}

}  // namespace nilgrowth
