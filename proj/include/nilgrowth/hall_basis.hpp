#ifndef NILGROWTH_HALL_BASIS_HPP
#define NILGROWTH_HALL_BASIS_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nilgrowth/bracket_tree.hpp"
#include "nilgrowth/free_algebra.hpp"
#include "nilgrowth/linalg.hpp"
#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// One homogeneous summand of a universal Lie polynomial: coeff * monomial.
struct LiePolynomialTerm {
  Rat coefficient;
  TreePtr monomial;  // variables 0 (X) and 1 (Y)
  unsigned degree = 0;
};

using LiePolynomial = std::vector<LiePolynomialTerm>;

/// Number of degree-m Hall elements on k generators (Witt formula).
long witt_dimension(unsigned k, unsigned m);

struct HallLimits {
  unsigned max_generators = 4;
  unsigned max_step = 6;
  size_t max_dimension = 120;
};

using SparseVec = std::vector<std::pair<size_t, Rat>>;

/// Hall basis of the free step-s nilpotent Lie algebra on k generators,
/// with structure constants and the universal BCH / Zassenhaus term tables
/// truncated at step s. Immutable after construction; share freely.
class HallBasis {
 public:
  struct Element {
    TreePtr tree;
    unsigned degree;
  };

  static std::shared_ptr<const HallBasis> make(unsigned k, unsigned s,
                                               const HallLimits& limits = {});

  unsigned generators() const { return k_; }
  unsigned step() const { return s_; }
  const std::string& id() const { return id_; }
  size_t dim() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  unsigned degree_of(size_t i) const { return elements_[i].degree; }

  /// Index range [first, first+count) of the degree-d elements.
  std::pair<size_t, size_t> degree_range(unsigned d) const;

  /// Coordinates of [e_i, e_j]; antisymmetric, zero past the step.
  SparseVec structure(size_t i, size_t j) const;

  /// Bilinear bracket on coordinate vectors.
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  /// Truncated BCH product making (coords, diamond) the free nilpotent group.
  RatVec bch(const RatVec& x, const RatVec& y) const;

  /// Homogeneous BCH terms of each degree 1..s (degree 1 is X + Y).
  const std::vector<LiePolynomial>& bch_terms() const { return bch_terms_; }

  /// Zassenhaus correction terms, degrees 2..s.
  const std::vector<LiePolynomial>& zassenhaus_terms() const {
    return zassenhaus_terms_;
  }

  /// Evaluates a universal Lie monomial at concrete coordinates.
  RatVec eval_tree(const TreePtr& t, const RatVec& x, const RatVec& y) const;

  /// Expresses a homogeneous Lie element given as an associative polynomial
  /// in Hall coordinates (throws if the polynomial is not in the Lie span).
  RatVec project_degree(const FreePoly& homogeneous, unsigned degree) const;

 private:
  HallBasis() = default;

  unsigned k_ = 0, s_ = 0;
  std::string id_;
  std::vector<Element> elements_;
  std::vector<size_t> degree_first_;  // index of first element per degree 1..s
  std::map<std::pair<size_t, size_t>, SparseVec> structure_;  // i < j only

  struct DegreeSolver {
    std::map<std::string, size_t> word_index;
    RatMat rref;       // rows x words
    RatMat transform;  // rows x rows, rref = transform * expansion
    std::vector<size_t> pivots;
    size_t first_element = 0;
  };
  std::vector<DegreeSolver> solvers_;  // per degree 1..s

  std::vector<LiePolynomial> bch_terms_;
  std::vector<LiePolynomial> zassenhaus_terms_;

  void build_elements(const HallLimits& limits);
  void build_solvers();
  void build_structure();
  void build_universal_tables();
  FreePoly expand_tree(const TreePtr& t) const;
};

using BasisPtr = std::shared_ptr<const HallBasis>;

}  // namespace nilgrowth

#endif
