#include "nilgrowth/linalg.hpp"

#include <cassert>

namespace nilgrowth {

RatMat mat_zero(size_t rows, size_t cols) {
  return RatMat(rows, RatVec(cols, Rat(0)));
}

RatMat mat_identity(size_t n) {
  RatMat a = mat_zero(n, n);
  for (size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

std::vector<size_t> rref(RatMat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rat mat_det(RatMat a) {
  const size_t n = a.size();
  if (n == 0) return Rat(1);
  assert(a[0].size() == n);
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rat inv = a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

size_t mat_rank(RatMat a) {
  return rref(a).size();
}

std::optional<RatVec> solve_row_system(const RatMat& a, const RatVec& b) {
  // x * A = b  <=>  A^T x^T = b^T; eliminate on the augmented transpose.
  const size_t n = a.size();
  if (n == 0) return vec_is_zero(b) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  const size_t m = a[0].size();
  assert(b.size() == m);
  RatMat aug = mat_zero(m, n + 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) aug[j][i] = a[i][j];
  for (size_t j = 0; j < m; ++j) aug[j][n] = b[j];
  std::vector<size_t> pivots = rref(aug);
  RatVec x(n, Rat(0));
  size_t r = 0;
  for (size_t c : pivots) {
    if (c == n) return std::nullopt;  // inconsistent
    x[c] = aug[r][n];
    ++r;
  }
  // Verify: free variables were set to zero; the residual must vanish.
  for (size_t j = 0; j < m; ++j) {
    Rat acc(0);
    for (size_t i = 0; i < n; ++i) acc += x[i] * a[i][j];
    if (acc != b[j]) return std::nullopt;
  }
  return x;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const RatVec& a) {
  for (const Rat& q : a)
    if (q != 0) return false;
  return true;
}

}  // namespace nilgrowth
