#ifndef NILGROWTH_LINALG_HPP
#define NILGROWTH_LINALG_HPP

#include <optional>
#include <vector>

#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// Dense rational matrix, row major. Small sizes only.
using RatMat = std::vector<RatVec>;

RatMat mat_zero(size_t rows, size_t cols);
RatMat mat_identity(size_t n);

Rat mat_det(RatMat a);
size_t mat_rank(RatMat a);

/// Solves x * A = b for a row vector x (A: n x m, b: length m).
/// Returns nullopt when the system is inconsistent or underdetermined rows
/// are needed; when A has independent rows and b lies in their span, the
/// solution is unique.
std::optional<RatVec> solve_row_system(const RatMat& a, const RatVec& b);

/// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(RatMat& a);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
bool vec_is_zero(const RatVec& a);

}  // namespace nilgrowth

#endif
