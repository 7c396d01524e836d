#ifndef NILGROWTH_SCALES_HPP
#define NILGROWTH_SCALES_HPP

#include <string>
#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/concrete_group.hpp"
#include "nilgrowth/explore.hpp"
#include "nilgrowth/heis_group.hpp"

namespace nilgrowth {

/// Weakly increasing chain of canonical forms indexed by scales, with the
/// scales n where the n+1 entry differs from the n entry.
struct ScaleReport {
  std::vector<unsigned> scales;
  std::vector<std::string> canonical_forms;
  std::vector<unsigned> change_scales;
  size_t change_count = 0;
};

/// H_n = subgroup generated by the elements of H of word length <= 2^n in
/// (G, S), for n = 0..n_max. Exact via lattice lifts; G must be a finite
/// abelian product with standard generators.
ScaleReport subgroup_scales_abelian(const ConcreteGroup& g,
                                    const std::vector<ConcreteGroup::El>& h_gens,
                                    unsigned n_max,
                                    const Budget& budget = Budget::with_env());

/// The Heisenberg case: word lengths from the interval-set ball DP over the
/// standard generators, subgroups joined in canonical form.
ScaleReport subgroup_scales_heisenberg(const std::vector<HeisEl>& h_gens,
                                       unsigned n_max,
                                       const Budget& budget = Budget::with_env());

/// New-relation detector for Pi Z/n_i with standard generators, scales
/// n >= 2 where the problem abelianizes exactly: a change at n means
/// span_Z(ker cap l1-ball(2^{n+1})) != span_Z(ker cap l1-ball(2^n)).
ScaleReport abelian_relation_scales(const std::vector<long long>& moduli,
                                    unsigned max_scale,
                                    const Budget& budget = Budget::with_env());

struct InjectivityCheck {
  unsigned radius = 0;  // 2^{k-1} - 1
  bool isomorphic = false;
};

/// Compares the labeled ball of radius 2^{k-1}-1 in Z against Z/n by
/// canonical labeled-BFS serialization.
InjectivityCheck injectivity_radius_check(long long n, unsigned k);

struct GeneratingCheck {
  Int group_order{0};
  Int subgroup_order{0};
  Int index{0};
  unsigned ball_radius = 0;  // 2*index - 1
  bool generates = false;
};

/// Verifies that (Sbar)^{2n-1} cap H generates H for H of index n in the
/// finite group G.
GeneratingCheck finite_index_generating_check(
    const ConcreteGroup& g, const std::vector<ConcreteGroup::El>& h_gens,
    const Budget& budget = Budget::with_env());

struct ChainCheck {
  size_t distinct_main = 0;
  size_t distinct_sub = 0;
  Int max_index{1};
  size_t bound = 0;
  bool ok = false;
};

/// #{H_i} <= (1 + floor(log2 max_i [H_i : H'_i])) * #{H'_i} for increasing
/// lattice chains with H'_i inside H_i at finite index.
ChainCheck chain_count_check(const std::vector<IntegerLattice>& chain,
                             const std::vector<IntegerLattice>& subchain);

/// The finite-index-subgroup specialization H'_i = H_i cap G', with the
/// bound driven by [ambient : G'].
ChainCheck chain_count_restricted(const std::vector<IntegerLattice>& chain,
                                  const IntegerLattice& gprime);

}  // namespace nilgrowth

#endif
