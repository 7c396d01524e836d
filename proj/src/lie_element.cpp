#include "nilgrowth/lie_element.hpp"

#include <cassert>
#include <cmath>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

int QuasiNorm::cmp(const QuasiNorm& o) const {
  // magnitude^(1/degree) vs other: compare magnitude^o.degree vs o.magnitude^degree.
  Rat lhs = rat_pow(magnitude, o.degree);
  Rat rhs = rat_pow(o.magnitude, degree);
  return ::cmp(lhs, rhs);
}

bool QuasiNorm::leq_rat(const Rat& lambda) const {
  if (lambda < 0) return false;
  return magnitude <= rat_pow(lambda, degree);
}

bool QuasiNorm::eq_rat(const Rat& lambda) const {
  if (lambda < 0) return false;
  return magnitude == rat_pow(lambda, degree);
}

QuasiNorm QuasiNorm::scaled(const Rat& lambda) const {
  return {rat_pow(lambda, degree) * magnitude, degree};
}

double QuasiNorm::approx() const {
  return std::pow(magnitude.get_d(), 1.0 / degree);
}

LieElement::LieElement(BasisPtr basis, RatVec coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  if (coords_.size() != basis_->dim())
    throw usage_error("coordinate count does not match basis dimension");
}

LieElement LieElement::zero(BasisPtr basis) {
  RatVec c(basis->dim(), Rat(0));
  return LieElement(std::move(basis), std::move(c));
}

LieElement LieElement::generator(BasisPtr basis, unsigned index) {
  if (index >= basis->generators())
    throw usage_error("generator index out of range");
  RatVec c(basis->dim(), Rat(0));
  c[index] = 1;
  return LieElement(std::move(basis), std::move(c));
}

void LieElement::require_same_basis(const LieElement& o) const {
  if (basis_ != o.basis_ && basis_->id() != o.basis_->id())
    throw usage_error("elements live in different bases: " + basis_->id() +
                      " vs " + o.basis_->id());
}

LieElement LieElement::operator+(const LieElement& o) const {
  require_same_basis(o);
  return LieElement(basis_, vec_add(coords_, o.coords_));
}

LieElement LieElement::operator-(const LieElement& o) const {
  require_same_basis(o);
  return LieElement(basis_, vec_sub(coords_, o.coords_));
}

LieElement LieElement::operator-() const {
  return LieElement(basis_, vec_scale(Rat(-1), coords_));
}

LieElement LieElement::scaled(const Rat& c) const {
  return LieElement(basis_, vec_scale(c, coords_));
}

bool LieElement::operator==(const LieElement& o) const {
  return basis_->id() == o.basis_->id() && coords_ == o.coords_;
}

LieElement LieElement::graded_component(unsigned d) const {
  RatVec c(basis_->dim(), Rat(0));
  if (d >= 1 && d <= basis_->step()) {
    auto [first, last] = basis_->degree_range(d);
    for (size_t i = first; i < last; ++i) c[i] = coords_[i];
  }
  return LieElement(basis_, std::move(c));
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  x.require_same_basis(y);
  return LieElement(x.basis_, x.basis_->bracket(x.coords_, y.coords_));
}

LieElement bch(const LieElement& x, const LieElement& y) {
  x.require_same_basis(y);
  return LieElement(x.basis_, x.basis_->bch(x.coords_, y.coords_));
}

LieElement LieElement::dilate(const Rat& lambda) const {
  if (lambda <= 0) throw usage_error("dilation requires lambda > 0");
  RatVec c(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i)
    c[i] = rat_pow(lambda, basis_->degree_of(i)) * coords_[i];
  return LieElement(basis_, std::move(c));
}

QuasiNorm LieElement::pnorm() const {
  QuasiNorm best = QuasiNorm::zero();
  for (unsigned d = 1; d <= basis_->step(); ++d) {
    auto [first, last] = basis_->degree_range(d);
    Rat m(0);
    for (size_t i = first; i < last; ++i) {
      Rat a = rat_abs(coords_[i]);
      if (a > m) m = a;
    }
    if (m == 0) continue;
    QuasiNorm cand{m, d};
    if (best.cmp(cand) < 0) best = cand;
  }
  return best;
}

bool LieElement::pnorm_leq(const Rat& lambda) const {
  if (lambda < 0) return is_zero();
  for (unsigned d = 1; d <= basis_->step(); ++d) {
    auto [first, last] = basis_->degree_range(d);
    Rat bound = rat_pow(lambda, d);
    for (size_t i = first; i < last; ++i)
      if (rat_abs(coords_[i]) > bound) return false;
  }
  return true;
}

std::vector<LiePolynomial> zassenhaus_terms(unsigned s) {
  auto basis = HallBasis::make(2, s);
  return basis->zassenhaus_terms();
}

LieElement eval_polynomial(const LiePolynomial& poly, const LieElement& x,
                           const LieElement& y) {
  LieElement acc = LieElement::zero(x.basis());
  for (const LiePolynomialTerm& term : poly) {
    RatVec v = x.basis()->eval_tree(term.monomial, x.coords(), y.coords());
    acc = acc + LieElement(x.basis(), std::move(v)).scaled(term.coefficient);
  }
  return acc;
}

}  // namespace nilgrowth
