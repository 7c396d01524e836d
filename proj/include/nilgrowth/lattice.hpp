#ifndef NILGROWTH_LATTICE_HPP
#define NILGROWTH_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilgrowth/linalg.hpp"
#include "nilgrowth/rational.hpp"

namespace nilgrowth {

using IntMat = std::vector<std::vector<Int>>;

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot). Unique per row space. Zero rows dropped.
IntMat hermite_normal_form(IntMat rows);

/// Additive subgroup of rational d-space in canonical form: an integer HNF
/// basis over a common denominator with gcd(denominator, entries) = 1.
/// Canonical form makes equality field-wise.
class IntegerLattice {
 public:
  static IntegerLattice zero(size_t ambient_dim);
  static IntegerLattice standard(size_t dim);
  static IntegerLattice span(size_t ambient_dim,
                             const std::vector<RatVec>& vectors);

  size_t ambient_dim() const { return ambient_; }
  size_t rank() const { return basis_.size(); }
  const IntMat& basis_int() const { return basis_; }
  const Int& denominator() const { return denom_; }
  RatVec basis_row(size_t i) const;
  std::vector<RatVec> basis_rows() const;

  bool contains(const RatVec& v) const;
  /// Integer coordinates of v over the basis rows, if v lies in the lattice.
  std::optional<std::vector<Int>> coordinates(const RatVec& v) const;

  bool operator==(const IntegerLattice& o) const;
  bool operator!=(const IntegerLattice& o) const { return !(*this == o); }

  IntegerLattice sum(const IntegerLattice& o) const;
  IntegerLattice intersect(const IntegerLattice& o) const;
  /// c * L for c != 0.
  IntegerLattice scaled(const Rat& c) const;

  /// Exact covolume; requires rank >= 1 and either full rank or a
  /// perfect-square Gram determinant.
  Rat covolume() const;
  /// Squared covolume (Gram determinant), exact for any rank >= 1.
  Rat covolume_squared() const;

  std::string canonical_string() const;

 private:
  IntegerLattice(size_t ambient, Int denom, IntMat basis)
      : ambient_(ambient), denom_(std::move(denom)), basis_(std::move(basis)) {}
  void normalize_content();

  size_t ambient_ = 0;
  Int denom_{1};
  IntMat basis_;  // HNF rows
};

/// Builds a span incrementally, skipping points already in the running span.
class SpanAccumulator {
 public:
  explicit SpanAccumulator(size_t ambient_dim)
      : lattice_(IntegerLattice::zero(ambient_dim)) {}

  /// Returns true when the span grew.
  bool add(const RatVec& v);
  const IntegerLattice& lattice() const { return lattice_; }

 private:
  IntegerLattice lattice_;
};

struct LatticeIndex {
  bool finite = false;
  Int value{0};  // valid when finite
};

/// [super : sub] for sub contained in super; infinite when ranks differ.
/// usage_error (naming a witness) when sub is not contained in super.
LatticeIndex lattice_index(const IntegerLattice& sub,
                           const IntegerLattice& super);

}  // namespace nilgrowth

#endif
