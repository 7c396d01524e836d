#include "nilgrowth/graded_lattice.hpp"

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

GradedLattice::GradedLattice(BasisPtr algebra, IntegerLattice lattice)
    : algebra_(std::move(algebra)), lattice_(std::move(lattice)) {
  if (lattice_.ambient_dim() != algebra_->dim())
    throw usage_error("lattice ambient dimension must match the algebra");
}

void GradedLattice::ensure_checked() const {
  if (closed_) return;
  for (size_t i = 0; i < lattice_.rank(); ++i) {
    RatVec u = lattice_.basis_row(i);
    for (size_t j = i + 1; j < lattice_.rank(); ++j) {
      RatVec v = lattice_.basis_row(j);
      RatVec w = algebra_->bracket(u, v);
      if (!lattice_.contains(w)) {
        closed_ = false;
        witness_ = std::make_pair(u, v);
        return;
      }
    }
  }
  closed_ = true;
}

bool GradedLattice::bracket_closed() const {
  ensure_checked();
  return *closed_;
}

std::optional<std::pair<RatVec, RatVec>> GradedLattice::bracket_witness()
    const {
  ensure_checked();
  return witness_;
}

bool GradedLattice::contains(const LieElement& x) const {
  return lattice_.contains(x.coords());
}

GradedLattice GradedLattice::scaled(const Rat& c) const {
  return GradedLattice(algebra_, lattice_.scaled(c));
}

bool GradedLattice::operator==(const GradedLattice& o) const {
  return algebra_->id() == o.algebra_->id() && lattice_ == o.lattice_;
}

std::string GradedLattice::canonical_string() const {
  return algebra_->id() + "/" + lattice_.canonical_string();
}

GradedLattice bracket_closure(BasisPtr algebra, const IntegerLattice& lattice) {
  IntegerLattice cur = lattice;
  // Round r only adds support in degrees >= r+1, so <= step rounds suffice.
  for (unsigned round = 0; round <= algebra->step() + 1; ++round) {
    std::vector<RatVec> extra;
    for (size_t i = 0; i < cur.rank(); ++i) {
      RatVec u = cur.basis_row(i);
      for (size_t j = i + 1; j < cur.rank(); ++j) {
        RatVec w = algebra->bracket(u, cur.basis_row(j));
        if (!cur.contains(w)) extra.push_back(std::move(w));
      }
    }
    if (extra.empty()) return GradedLattice(std::move(algebra), std::move(cur));
    std::vector<RatVec> rows = cur.basis_rows();
    rows.insert(rows.end(), extra.begin(), extra.end());
    cur = IntegerLattice::span(cur.ambient_dim(), rows);
  }
  throw bound_violation("bracket closure failed to stabilize");
}

GradedLattice bracket_closure(BasisPtr algebra,
                              const std::vector<LieElement>& elements) {
  std::vector<RatVec> rows;
  rows.reserve(elements.size());
  for (const LieElement& e : elements) {
    if (e.basis()->id() != algebra->id())
      throw usage_error("bracket closure input from a different algebra");
    rows.push_back(e.coords());
  }
  size_t dim = algebra->dim();
  return bracket_closure(std::move(algebra), IntegerLattice::span(dim, rows));
}

unsigned homogeneous_dimension(const HallBasis& basis) {
  unsigned q = 0;
  for (unsigned d = 1; d <= basis.step(); ++d) {
    auto [first, last] = basis.degree_range(d);
    q += d * static_cast<unsigned>(last - first);
  }
  return q;
}

}  // namespace nilgrowth
