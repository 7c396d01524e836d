#ifndef NILGROWTH_BOX_GROWTH_HPP
#define NILGROWTH_BOX_GROWTH_HPP

#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/heis_group.hpp"
#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// Growth profile of the Heisenberg group generated by the box set
/// S = {(a,b,c) : |a|,|b| <= N, |c| <= N^3}: exact |S^n| by an interval-set
/// DP over (a,b) cells, plus two-segment log-log slope fits split at n = N.
struct BoxGrowthProfile {
  unsigned big_n = 0;
  unsigned n_max = 0;
  std::vector<Int> sizes;  // |S^n| for n = 1..n_max
  double slope_low = 0;    // fit over n = 1..N
  double slope_high = 0;   // fit over n = N+1..n_max
  bool relations_ok = false;
  unsigned max_relation_length = 0;
};

BoxGrowthProfile box_growth_profile(unsigned big_n, unsigned n_max,
                               std::uint64_t seed = 7,
                               const Budget& budget = Budget::with_env());

/// Verifies the generating relations of the box presentation as exact matrix
/// identities: the commutator relation, the two center-commutation laws, and
/// the three generator-exchange families sampled at random cells. All have
/// word length at most five in S. Returns the maximum length used.
bool verify_box_relations(unsigned big_n, unsigned samples, std::uint64_t seed,
                          unsigned* max_length_out = nullptr);

}  // namespace nilgrowth

#endif
