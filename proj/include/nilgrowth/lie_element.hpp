#ifndef NILGROWTH_LIE_ELEMENT_HPP
#define NILGROWTH_LIE_ELEMENT_HPP

#include <vector>

#include "nilgrowth/hall_basis.hpp"
#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// Value of the homogeneous quasi-norm: magnitude^(1/degree), kept exact.
struct QuasiNorm {
  Rat magnitude{0};
  unsigned degree = 1;

  static QuasiNorm zero() { return {Rat(0), 1}; }

  int cmp(const QuasiNorm& o) const;
  bool operator<(const QuasiNorm& o) const { return cmp(o) < 0; }
  bool operator==(const QuasiNorm& o) const { return cmp(o) == 0; }

  /// value <= lambda, exactly.
  bool leq_rat(const Rat& lambda) const;
  bool eq_rat(const Rat& lambda) const;

  /// lambda * value as a quasi-norm datum.
  QuasiNorm scaled(const Rat& lambda) const;

  double approx() const;
};

/// Element of a free nilpotent Lie algebra in Hall coordinates.
class LieElement {
 public:
  LieElement(BasisPtr basis, RatVec coords);
  static LieElement zero(BasisPtr basis);
  static LieElement generator(BasisPtr basis, unsigned index);

  const BasisPtr& basis() const { return basis_; }
  const RatVec& coords() const { return coords_; }

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator-() const;
  LieElement scaled(const Rat& c) const;

  bool operator==(const LieElement& o) const;
  bool is_zero() const { return vec_is_zero(coords_); }

  /// Component supported on the degree-d basis elements.
  LieElement graded_component(unsigned d) const;

  friend LieElement bracket(const LieElement& x, const LieElement& y);

  /// BCH product; the group law of the simply connected model.
  friend LieElement bch(const LieElement& x, const LieElement& y);

  /// Graded dilation: degree-i part scales by lambda^i. Requires lambda > 0.
  LieElement dilate(const Rat& lambda) const;

  /// Homogeneous quasi-norm max_i ||X_i||_inf^{1/i}.
  QuasiNorm pnorm() const;
  /// pnorm(X) <= lambda via per-degree comparisons ||X_i|| <= lambda^i.
  bool pnorm_leq(const Rat& lambda) const;

 private:
  void require_same_basis(const LieElement& o) const;

  BasisPtr basis_;
  RatVec coords_;
};

LieElement bracket(const LieElement& x, const LieElement& y);
LieElement bch(const LieElement& x, const LieElement& y);

/// Zassenhaus correction terms for step s, degrees 2..s (empty for s = 1):
/// exp(X+Y) = exp(X) exp(Y) exp(L_2) ... exp(L_s).
std::vector<LiePolynomial> zassenhaus_terms(unsigned s);

/// Evaluates a universal Lie polynomial at concrete elements.
LieElement eval_polynomial(const LiePolynomial& poly, const LieElement& x,
                           const LieElement& y);

}  // namespace nilgrowth

#endif
