#ifndef NILGROWTH_HARMONIOUS_HPP
#define NILGROWTH_HARMONIOUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/graded_lattice.hpp"

namespace nilgrowth {

enum class Tri { True, False, Inconclusive };

std::string tri_str(Tri t);

/// Outcome of the harmoniousness checks. `conclusion` is the conjunction:
/// any False wins, else any Inconclusive, else True.
struct HarmoniousVerdict {
  Tri additive = Tri::True;
  std::string additive_witness;
  Tri bracket_closed = Tri::True;
  std::string bracket_witness;
  Tri diamond_closed = Tri::True;
  std::string diamond_witness;

  Tri conclusion() const;
  bool refuted() const { return conclusion() == Tri::False; }
};

/// Provenance of the step constants C1, C2.
enum class ConstantProvenance { ProvenSmallStep, ZassenhausLcm, UserOverride };

struct ConstantTable {
  unsigned step = 1;
  Int c1{1};
  Int c2{1};
  ConstantProvenance provenance = ConstantProvenance::ProvenSmallStep;

  /// s=1 -> (1,1); s=2 -> (2,2); s in {3,4,...} -> C1 = lcm of Zassenhaus
  /// coefficient denominators through degree s, C2 = C1^{3(s-1)}.
  static ConstantTable defaults(unsigned step);
  static ConstantTable override(unsigned step, Int c1, Int c2);
};

/// A subgroup of the BCH group given by generators (log coordinates), an
/// exact membership oracle, and a display name.
struct GroupModel {
  BasisPtr algebra;
  std::vector<RatVec> generators;
  std::function<bool(const RatVec&)> member;
  std::string name;
};

struct EnumerationOptions {
  unsigned max_word_length = 10;
  Rat pnorm_cap = Rat(64);
  std::uint64_t max_elements = 500'000;
};

/// Diamond-closure of the generators out to a word-length and quasi-norm
/// budget. Elements are log coordinates; deterministic order.
std::vector<RatVec> enumerate_subgroup(const BasisPtr& algebra,
                                       const std::vector<RatVec>& generators,
                                       const EnumerationOptions& opts);

/// Is exp(L) a harmonious subgroup: additivity is free for a lattice, bracket
/// closure is a finite check, and diamond closure is certified for step <= 2
/// (the correction term is bilinear) or probed to a depth budget otherwise.
HarmoniousVerdict is_harmonious(const GradedLattice& L,
                                unsigned product_depth = 3);

/// Harmoniousness of an enumerated subgroup against its membership oracle;
/// refutations carry witnesses, clean runs on step >= 3 stay inconclusive.
HarmoniousVerdict is_harmonious(const GroupModel& G,
                                const EnumerationOptions& opts = {});

struct HarmoniousConstruction {
  GradedLattice lattice;
  HarmoniousVerdict verdict;
  bool containment_ok = true;
  std::string containment_witness;
};

/// H_-: exp(C1 * span_Z(log Gamma)). Throws bound_violation naming the
/// constant when harmoniousness is refuted.
HarmoniousConstruction h_minus(const GroupModel& gamma,
                               const ConstantTable& constants,
                               const EnumerationOptions& opts = {});

/// H_+: exp(C1 * bracket_closure((1/C1) span_Z(log Gamma))).
HarmoniousConstruction h_plus(const GroupModel& gamma,
                              const ConstantTable& constants,
                              const EnumerationOptions& opts = {});

/// [super : sub] by Schreier coset enumeration under the BCH product.
Int multiplicative_index(const GroupModel& sub, const GroupModel& super,
                         const Budget& budget = Budget::with_env());

/// Group model whose elements are exactly exp of a lattice.
GroupModel lattice_group(const GradedLattice& L, const std::string& name);

struct SandwichReport {
  std::string gamma_spec;
  Int c1, c2;
  GradedLattice h_minus_lattice;
  GradedLattice h_plus_lattice;
  Int additive_index;
  Int mult_index;
  Int bound;  // (C2*C1)^dim
  bool equality_ok = false;
  bool bound_ok = false;
  Tri harmonious_minus = Tri::True;
  Tri harmonious_plus = Tri::True;
  bool containment_ok = true;
};

/// Builds the sandwich for Gamma, compares the additive index (determinants)
/// with the multiplicative one (coset enumeration), and checks the ceiling.
SandwichReport index_sandwich_bound_check(
    const GroupModel& gamma, const ConstantTable& constants,
    const EnumerationOptions& opts = {},
    const Budget& budget = Budget::with_env());

/// |{X in L : pnorm(X) <= lambda}| by per-degree box enumeration.
Int folner_count(const GradedLattice& L, const Rat& lambda,
                 const Budget& budget = Budget::with_env());

}  // namespace nilgrowth

#endif
