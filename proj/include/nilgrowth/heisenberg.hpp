#ifndef NILGROWTH_HEISENBERG_HPP
#define NILGROWTH_HEISENBERG_HPP

#include <array>

#include "nilgrowth/lie_element.hpp"

namespace nilgrowth {

using Mat3 = std::array<std::array<Rat, 3>, 3>;

Mat3 mat3_zero();
Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
bool mat3_eq(const Mat3& a, const Mat3& b);

/// Strictly upper triangular matrix with entries (a, b, c) at (0,1), (1,2), (0,2).
Mat3 heis_algebra_mat(const Rat& a, const Rat& b, const Rat& c);
/// Unipotent matrix with the same entry naming.
Mat3 heis_group_mat(const Rat& a, const Rat& b, const Rat& c);

/// Matrix exponential of a strictly upper triangular 3x3 input: exp maps
/// (a, b, c) to group entries (a, b, c + ab/2). Throws usage_error on shape.
Mat3 heisenberg_exp(const Mat3& m);
/// Inverse of heisenberg_exp: requires a unipotent upper triangular input.
Mat3 heisenberg_log(const Mat3& m);

/// The step-2 Hall basis on 2 generators; (a, b, c) are the coordinates of
/// a*e1 + b*e2 + c*[e1,e2].
BasisPtr heisenberg_basis();
LieElement heis(const Rat& a, const Rat& b, const Rat& c);

/// Coordinate identification with the matrix model.
LieElement heis_from_algebra_mat(const Mat3& m);
Mat3 heis_to_algebra_mat(const LieElement& x);

}  // namespace nilgrowth

#endif
