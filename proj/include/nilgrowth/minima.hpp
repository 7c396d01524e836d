#ifndef NILGROWTH_MINIMA_HPP
#define NILGROWTH_MINIMA_HPP

#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/convex_body.hpp"
#include "nilgrowth/lattice.hpp"

namespace nilgrowth {

struct SuccessiveMinima {
  std::vector<GaugeValue> values;  // lambda_1 <= ... <= lambda_r
  std::vector<RatVec> witnesses;   // independent lattice vectors attaining them
};

/// Successive minima of the lattice (rank r >= 1, minima taken within its
/// span) with respect to the symmetric convex body. Exact via enumeration
/// of attained gauge values.
SuccessiveMinima successive_minima(const IntegerLattice& lattice,
                                   const ConvexBody& body,
                                   const Budget& budget = Budget::with_env());

struct MinkowskiReport {
  size_t dim = 0;
  SuccessiveMinima minima;
  Rat covolume;
  VolumeInterval volume;
  // rho = 2^d covol / (vol * prod lambda_i); certified bounds on rho^2.
  Rat rho_sq_lo, rho_sq_hi;
  bool rho_exact = false;
  Rat rho;  // valid when rho_exact
  double rho_approx = 0;
  // The same quantity under the alternative normalization
  // covol / (2^d vol prod lambda_i) = rho / 4^d, recorded alongside.
  double rho_alt_approx = 0;
  bool verdict = false;  // whole rho interval inside [1, d!]
};

/// Verifies 1 <= 2^d covol / (vol(K) prod lambda_i) <= d! with certified
/// interval bounds where the volume involves pi.
MinkowskiReport minkowski_second_check(const IntegerLattice& lattice,
                                       const ConvexBody& body,
                                       const Budget& budget = Budget::with_env());

}  // namespace nilgrowth

#endif
