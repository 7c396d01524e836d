#include "nilgrowth/heisenberg.hpp"

#include <mutex>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

Mat3 mat3_zero() {
  Mat3 m;
  for (auto& row : m)
    for (auto& q : row) q = 0;
  return m;
}

Mat3 mat3_identity() {
  Mat3 m = mat3_zero();
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r = mat3_zero();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

bool mat3_eq(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

Mat3 heis_algebra_mat(const Rat& a, const Rat& b, const Rat& c) {
  Mat3 m = mat3_zero();
  m[0][1] = a;
  m[1][2] = b;
  m[0][2] = c;
  return m;
}

Mat3 heis_group_mat(const Rat& a, const Rat& b, const Rat& c) {
  Mat3 m = mat3_identity();
  m[0][1] = a;
  m[1][2] = b;
  m[0][2] = c;
  return m;
}

namespace {

void require_strictly_upper(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j)
      if (m[i][j] != 0)
        throw usage_error("matrix is not strictly upper triangular");
}

void require_unipotent(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (m[i][j] != 0) throw usage_error("matrix is not upper triangular");
  for (int i = 0; i < 3; ++i)
    if (m[i][i] != 1) throw usage_error("matrix is not unipotent");
}

}  // namespace

Mat3 heisenberg_exp(const Mat3& m) {
  require_strictly_upper(m);
  // exp(M) = I + M + M^2/2 since M^3 = 0.
  Mat3 sq = mat3_mul(m, m);
  Mat3 r = mat3_identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] += m[i][j] + sq[i][j] / 2;
  return r;
}

Mat3 heisenberg_log(const Mat3& m) {
  require_unipotent(m);
  // log(I + N) = N - N^2/2 since N^3 = 0.
  Mat3 n = m;
  for (int i = 0; i < 3; ++i) n[i][i] = 0;
  Mat3 sq = mat3_mul(n, n);
  Mat3 r = mat3_zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = n[i][j] - sq[i][j] / 2;
  return r;
}

BasisPtr heisenberg_basis() {
  static std::mutex mu;
  static BasisPtr basis;
  std::lock_guard<std::mutex> lock(mu);
  if (!basis) basis = HallBasis::make(2, 2);
  return basis;
}

LieElement heis(const Rat& a, const Rat& b, const Rat& c) {
  return LieElement(heisenberg_basis(), RatVec{a, b, c});
}

LieElement heis_from_algebra_mat(const Mat3& m) {
  require_strictly_upper(m);
  return heis(m[0][1], m[1][2], m[0][2]);
}

Mat3 heis_to_algebra_mat(const LieElement& x) {
  const RatVec& c = x.coords();
  if (c.size() != 3) throw usage_error("element is not in the Heisenberg basis");
  return heis_algebra_mat(c[0], c[1], c[2]);
}

}  // namespace nilgrowth
