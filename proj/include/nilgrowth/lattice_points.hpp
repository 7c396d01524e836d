#ifndef NILGROWTH_LATTICE_POINTS_HPP
#define NILGROWTH_LATTICE_POINTS_HPP

#include <functional>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/convex_body.hpp"
#include "nilgrowth/lattice.hpp"

namespace nilgrowth {

/// Visits every lattice point v with |v_j| <= bounds_j (the zero vector
/// included), charging the meter per candidate coefficient tuple.
void enumerate_box(const IntegerLattice& lattice, const RatVec& bounds,
                   BudgetMeter& meter,
                   const std::function<void(const RatVec&)>& visit);

/// Exact count of lattice points in lambda * body. Axis-aligned kinds count
/// whole intervals at the innermost level instead of iterating.
Int count_points(const IntegerLattice& lattice, const ConvexBody& body,
                 const Rat& lambda, BudgetMeter& meter);

/// Collects the lattice points of lambda * body.
std::vector<RatVec> points_in_body(const IntegerLattice& lattice,
                                   const ConvexBody& body, const Rat& lambda,
                                   BudgetMeter& meter);

/// Visits the points of `body` outside `inner` (pass null to keep
/// everything); the incremental step of a nested exploration. The visitor
/// returns false to stop early.
void for_points_in_shell(const IntegerLattice& lattice, const ConvexBody& body,
                         const ConvexBody* inner, BudgetMeter& meter,
                         const std::function<bool(const RatVec&)>& visit);

}  // namespace nilgrowth

#endif
