#ifndef NILGROWTH_GRADED_LATTICE_HPP
#define NILGROWTH_GRADED_LATTICE_HPP

#include <optional>
#include <string>
#include <utility>

#include "nilgrowth/lattice.hpp"
#include "nilgrowth/lie_element.hpp"

namespace nilgrowth {

/// An additive lattice sitting inside the coordinates of a graded nilpotent
/// Lie algebra, with a cached bracket-closure verdict.
class GradedLattice {
 public:
  GradedLattice(BasisPtr algebra, IntegerLattice lattice);

  const BasisPtr& algebra() const { return algebra_; }
  const IntegerLattice& lattice() const { return lattice_; }

  /// Finite check on basis-row pairs (sufficient by bilinearity).
  bool bracket_closed() const;
  /// Pair of basis rows whose bracket escapes, when not closed.
  std::optional<std::pair<RatVec, RatVec>> bracket_witness() const;

  bool contains(const LieElement& x) const;
  GradedLattice scaled(const Rat& c) const;

  bool operator==(const GradedLattice& o) const;
  std::string canonical_string() const;

 private:
  void ensure_checked() const;

  BasisPtr algebra_;
  IntegerLattice lattice_;
  mutable std::optional<bool> closed_;
  mutable std::optional<std::pair<RatVec, RatVec>> witness_;
};

/// Smallest additive lattice containing the inputs and closed under the
/// bracket. Terminates because additions land in strictly higher degrees.
GradedLattice bracket_closure(BasisPtr algebra,
                              const std::vector<LieElement>& elements);
GradedLattice bracket_closure(BasisPtr algebra, const IntegerLattice& lattice);

/// Homogeneous dimension q = sum_i i * dim(V_i) of the graded algebra.
unsigned homogeneous_dimension(const HallBasis& basis);

}  // namespace nilgrowth

#endif
