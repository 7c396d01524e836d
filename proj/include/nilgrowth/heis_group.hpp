#ifndef NILGROWTH_HEIS_GROUP_HPP
#define NILGROWTH_HEIS_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilgrowth/budget.hpp"
#include "nilgrowth/lattice.hpp"

namespace nilgrowth {

/// Element of the discrete Heisenberg group: the unipotent integer matrix
/// [[1,a,c],[0,1,b],[0,0,1]]. Product: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
struct HeisEl {
  Int a{0}, b{0}, c{0};

  bool operator==(const HeisEl& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const HeisEl& o) const;
  std::string str() const;
};

HeisEl heis_mul(const HeisEl& x, const HeisEl& y);
HeisEl heis_inv(const HeisEl& x);
HeisEl heis_pow(const HeisEl& x, const Int& n);
HeisEl heis_commutator(const HeisEl& x, const HeisEl& y);

/// Disjoint sorted integer intervals; the exact c-fibers of Heisenberg balls.
class IntervalSet {
 public:
  void insert(long long lo, long long hi);
  void merge_from(const IntervalSet& o, long long shift);
  bool contains(long long v) const;
  std::uint64_t count() const;
  const std::vector<std::pair<long long, long long>>& intervals() const {
    return ivs_;
  }

 private:
  std::vector<std::pair<long long, long long>> ivs_;  // normalized
};

/// Ball sizes, distances, and cell fibers of a Heisenberg Cayley graph by
/// dynamic programming over (a, b) cells carrying exact interval sets.
/// Works for any finite generating set: right multiplication shifts each
/// cell fiber by a constant. Cells live on a dense double-buffered grid.
class HeisBallDP {
 public:
  explicit HeisBallDP(std::vector<HeisEl> generators);  // symmetrized

  /// Extends the DP to the given radius (element budget guards blowup).
  void grow_to(unsigned radius, std::uint64_t element_budget = 200'000'000);

  unsigned radius() const { return radius_; }
  Int ball_size() const;  // current radius
  bool ball_contains(const HeisEl& v) const;
  /// Word length of v, growing the DP up to max_radius; nullopt if farther.
  std::optional<unsigned> distance(const HeisEl& v, unsigned max_radius);

  using Cell = std::pair<long long, long long>;
  /// Visits every nonempty cell in row-major order.
  void for_each_cell(
      const std::function<void(long long, long long, const IntervalSet&)>& fn)
      const;

 private:
  size_t index(long long a, long long b) const;
  void ensure_span(long long span);

  std::vector<HeisEl> gens_;
  long long max_gen_ab_ = 0;
  long long span_ = 0;                // grid covers [-span_, span_]^2
  std::vector<IntervalSet> grid_;     // (2 span + 1)^2 entries
  unsigned radius_ = 0;
};

/// Canonical form of a finitely generated subgroup of the discrete
/// Heisenberg group: the abelianized image lattice in Z^2, the central
/// intersection modulus m (Gamma cap center = m Z), and the central offsets
/// of canonical preimages of the image basis. Two subgroups are equal iff
/// their canonical forms coincide field-wise.
class HeisenbergSubgroup {
 public:
  static HeisenbergSubgroup generate(const std::vector<HeisEl>& gens);
  static HeisenbergSubgroup trivial();

  const IntegerLattice& image() const { return image_; }
  const Int& center_modulus() const { return m_; }
  const std::vector<HeisEl>& image_preimages() const { return preimages_; }

  bool member(const HeisEl& v) const;
  HeisenbergSubgroup join(const HeisenbergSubgroup& o) const;
  HeisenbergSubgroup join_element(const HeisEl& g) const;

  /// Image basis preimages plus the central generator when m > 0.
  std::vector<HeisEl> canonical_generators() const;

  bool operator==(const HeisenbergSubgroup& o) const;
  bool operator!=(const HeisenbergSubgroup& o) const { return !(*this == o); }
  std::string canonical_string() const;

  /// Central offset of the canonical preimage of an image vector; nullopt if
  /// the vector is outside the image lattice.
  std::optional<Int> central_offset(const Int& a, const Int& b) const;

 private:
  IntegerLattice image_ = IntegerLattice::zero(2);
  Int m_{0};
  std::vector<HeisEl> preimages_;  // one per image basis row, offsets reduced
};

}  // namespace nilgrowth

#endif
