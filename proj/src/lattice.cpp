#include "nilgrowth/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

IntMat hermite_normal_form(IntMat rows) {
  if (rows.empty()) return rows;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclidean sweep: leave a single nonzero entry in column c at row r.
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            rat_abs(Rat(rows[i][c])) < rat_abs(Rat(rows[best][c])))
          best = i;
      }
      if (best == rows.size()) break;  // column is zero below r
      std::swap(rows[r], rows[best]);
      bool reduced_all = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(),
                   rows[r][c].get_mpz_t());
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& q : rows[r]) q = -q;
    for (size_t i = 0; i < r; ++i) {
      if (rows[i][c] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntegerLattice IntegerLattice::zero(size_t ambient_dim) {
  return IntegerLattice(ambient_dim, Int(1), {});
}

IntegerLattice IntegerLattice::standard(size_t dim) {
  IntMat basis(dim, std::vector<Int>(dim, Int(0)));
  for (size_t i = 0; i < dim; ++i) basis[i][i] = 1;
  return IntegerLattice(dim, Int(1), std::move(basis));
}

void IntegerLattice::normalize_content() {
  Int g = denom_;
  for (const auto& row : basis_)
    for (const Int& q : row) g = int_gcd(g, q);
  if (g > 1) {
    denom_ /= g;
    for (auto& row : basis_)
      for (Int& q : row) q /= g;
  }
}

IntegerLattice IntegerLattice::span(size_t ambient_dim,
                                    const std::vector<RatVec>& vectors) {
  Int denom(1);
  for (const RatVec& v : vectors) {
    if (v.size() != ambient_dim)
      throw usage_error("span vector has dimension " +
                        std::to_string(v.size()) + ", expected " +
                        std::to_string(ambient_dim));
    for (const Rat& q : v) denom = int_lcm(denom, q.get_den());
  }
  IntMat rows;
  rows.reserve(vectors.size());
  for (const RatVec& v : vectors) {
    std::vector<Int> row(ambient_dim);
    bool nonzero = false;
    for (size_t j = 0; j < ambient_dim; ++j) {
      Rat scaled = v[j] * denom;
      assert(scaled.get_den() == 1);
      row[j] = scaled.get_num();
      if (row[j] != 0) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  IntegerLattice lat(ambient_dim, denom, hermite_normal_form(std::move(rows)));
  lat.normalize_content();
  return lat;
}

RatVec IntegerLattice::basis_row(size_t i) const {
  RatVec v(ambient_);
  for (size_t j = 0; j < ambient_; ++j) v[j] = rat(basis_[i][j], denom_);
  return v;
}

std::vector<RatVec> IntegerLattice::basis_rows() const {
  std::vector<RatVec> rows;
  rows.reserve(rank());
  for (size_t i = 0; i < rank(); ++i) rows.push_back(basis_row(i));
  return rows;
}

std::optional<std::vector<Int>> IntegerLattice::coordinates(
    const RatVec& v) const {
  if (v.size() != ambient_)
    throw usage_error("vector dimension mismatch in lattice membership");
  // Need denom * v integral.
  std::vector<Int> w(ambient_);
  for (size_t j = 0; j < ambient_; ++j) {
    Rat scaled = v[j] * denom_;
    if (scaled.get_den() != 1) return std::nullopt;
    w[j] = scaled.get_num();
  }
  std::vector<Int> coords(rank(), Int(0));
  for (size_t t = 0; t < rank(); ++t) {
    size_t p = 0;
    while (p < ambient_ && basis_[t][p] == 0) ++p;
    assert(p < ambient_);
    Int rem;
    mpz_tdiv_r(rem.get_mpz_t(), w[p].get_mpz_t(), basis_[t][p].get_mpz_t());
    if (rem != 0) return std::nullopt;
    Int q = w[p] / basis_[t][p];
    if (q != 0)
      for (size_t j = 0; j < ambient_; ++j) w[j] -= q * basis_[t][j];
    coords[t] = q;
  }
  for (const Int& q : w)
    if (q != 0) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(const RatVec& v) const {
  return coordinates(v).has_value();
}

bool IntegerLattice::operator==(const IntegerLattice& o) const {
  return ambient_ == o.ambient_ && denom_ == o.denom_ && basis_ == o.basis_;
}

IntegerLattice IntegerLattice::sum(const IntegerLattice& o) const {
  if (ambient_ != o.ambient_)
    throw usage_error("lattice sum with mismatched ambient dimensions");
  std::vector<RatVec> rows = basis_rows();
  for (const RatVec& r : o.basis_rows()) rows.push_back(r);
  return span(ambient_, rows);
}

IntegerLattice IntegerLattice::intersect(const IntegerLattice& o) const {
  if (ambient_ != o.ambient_)
    throw usage_error("lattice intersection with mismatched ambient dimensions");
  // Common denominator D; work with integer row spans A and B.
  Int d = int_lcm(denom_, o.denom_);
  Int fa = d / denom_, fb = d / o.denom_;
  // HNF of [A|A; B|0]: rows with zero left block carry a basis of A cap B.
  IntMat stacked;
  for (const auto& row : basis_) {
    std::vector<Int> r(2 * ambient_);
    for (size_t j = 0; j < ambient_; ++j) r[j] = r[ambient_ + j] = row[j] * fa;
    stacked.push_back(std::move(r));
  }
  for (const auto& row : o.basis_) {
    std::vector<Int> r(2 * ambient_, Int(0));
    for (size_t j = 0; j < ambient_; ++j) r[j] = row[j] * fb;
    stacked.push_back(std::move(r));
  }
  IntMat h = hermite_normal_form(std::move(stacked));
  std::vector<RatVec> rows;
  for (const auto& row : h) {
    bool left_zero = true;
    for (size_t j = 0; j < ambient_ && left_zero; ++j)
      if (row[j] != 0) left_zero = false;
    if (!left_zero) continue;
    RatVec v(ambient_);
    for (size_t j = 0; j < ambient_; ++j) v[j] = rat(row[ambient_ + j], d);
    rows.push_back(std::move(v));
  }
  return span(ambient_, rows);
}

IntegerLattice IntegerLattice::scaled(const Rat& c) const {
  if (c == 0) throw usage_error("lattice scaling by zero");
  std::vector<RatVec> rows = basis_rows();
  for (RatVec& r : rows) r = vec_scale(c, r);
  return span(ambient_, rows);
}

Rat IntegerLattice::covolume_squared() const {
  if (rank() == 0) throw usage_error("covolume of the zero lattice");
  RatMat gram = mat_zero(rank(), rank());
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = 0; j < rank(); ++j) {
      Rat acc(0);
      for (size_t t = 0; t < ambient_; ++t)
        acc += Rat(basis_[i][t]) * Rat(basis_[j][t]);
      gram[i][j] = acc / (Rat(denom_) * Rat(denom_));
    }
  return mat_det(std::move(gram));
}

Rat IntegerLattice::covolume() const {
  if (rank() == 0) throw usage_error("covolume of the zero lattice");
  if (rank() == ambient_) {
    RatMat m = mat_zero(rank(), rank());
    for (size_t i = 0; i < rank(); ++i)
      for (size_t j = 0; j < rank(); ++j) m[i][j] = rat(basis_[i][j], denom_);
    return rat_abs(mat_det(std::move(m)));
  }
  return rat_sqrt_exact(covolume_squared());
}

std::string IntegerLattice::canonical_string() const {
  std::ostringstream os;
  os << ambient_ << ";" << denom_.get_str() << ";";
  for (const auto& row : basis_) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << row[j].get_str();
    }
    os << "|";
  }
  return os.str();
}

bool SpanAccumulator::add(const RatVec& v) {
  if (lattice_.contains(v)) return false;
  std::vector<RatVec> rows = lattice_.basis_rows();
  rows.push_back(v);
  lattice_ = IntegerLattice::span(lattice_.ambient_dim(), rows);
  return true;
}

LatticeIndex lattice_index(const IntegerLattice& sub,
                           const IntegerLattice& super) {
  if (sub.ambient_dim() != super.ambient_dim())
    throw usage_error("lattice index with mismatched ambient dimensions");
  RatMat transition;
  for (size_t i = 0; i < sub.rank(); ++i) {
    RatVec row = sub.basis_row(i);
    auto coords = super.coordinates(row);
    if (!coords)
      throw usage_error("sublattice containment fails at basis vector " +
                        vec_to_string(row));
    RatVec trow(coords->size());
    for (size_t j = 0; j < coords->size(); ++j) trow[j] = Rat((*coords)[j]);
    transition.push_back(std::move(trow));
  }
  if (sub.rank() < super.rank()) return {false, Int(0)};
  assert(sub.rank() == super.rank());
  if (sub.rank() == 0) return {true, Int(1)};
  Rat det = rat_abs(mat_det(std::move(transition)));
  assert(det.get_den() == 1 && det != 0);
  return {true, det.get_num()};
}

}  // namespace nilgrowth
