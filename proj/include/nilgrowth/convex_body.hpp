#ifndef NILGROWTH_CONVEX_BODY_HPP
#define NILGROWTH_CONVEX_BODY_HPP

#include <string>
#include <vector>

#include "nilgrowth/linalg.hpp"
#include "nilgrowth/rational.hpp"

namespace nilgrowth {

enum class BodyKind { Box, L1Ball, L2Ball, Polytope, GradedBox };

/// Certified rational bounds; lo == hi for exactly computable volumes.
struct VolumeInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};

/// Minkowski gauge value. Rational for polyhedral kinds; for the l2 ball only
/// the square is rational and sqrt_form is set.
struct GaugeValue {
  Rat value;     // meaningful when !sqrt_form
  Rat value_sq;  // always exact
  bool sqrt_form = false;

  double approx() const;
  std::string str() const;
};

/// Certified lower/upper rational bounds on pi (MPFR, 256 bits).
std::pair<Rat, Rat> pi_bounds();

/// Symmetric convex body with exact membership, exact or certified-interval
/// volume, and exact containment checks between bodies.
class ConvexBody {
 public:
  static ConvexBody box(RatVec half_widths);
  static ConvexBody l1_ball(size_t dim, const Rat& radius);
  static ConvexBody l2_ball(size_t dim, const Rat& radius);
  /// conv(+-v_1, ..., +-v_d) for d independent vertices (a linear image of
  /// the cross-polytope); the class of vertex polytopes with exact volume.
  static ConvexBody polytope(std::vector<RatVec> vertices);
  /// {v : |v_i| <= scale^degree_i}; the sublevel set of the quasi-norm.
  static ConvexBody graded_box(std::vector<unsigned> degrees, const Rat& scale);

  BodyKind kind() const { return kind_; }
  size_t dim() const { return dim_; }

  bool contains(const RatVec& v) const;
  /// v in lambda * K, exactly (lambda >= 0).
  bool contains_scaled(const RatVec& v, const Rat& lambda) const;

  GaugeValue gauge(const RatVec& v) const;

  /// Lower bound on gauge^2 valid when the unset coordinates of a partial
  /// point are zero: coordinates contribute monotonically for the box, l1,
  /// l2, and graded kinds. Returns 0 (no information) for polytopes.
  Rat gauge_sq_lower(const RatVec& partial) const;

  /// Per-axis bounds: K inside the box of these half-widths.
  RatVec outer_box() const;
  Rat outer_radius() const;

  VolumeInterval volume() const;

  /// Linear scaling lambda * K (lambda > 0). A graded box degrades to a Box.
  ConvexBody scaled(const Rat& lambda) const;

  /// Exact check that *this is contained in `other`.
  bool subset_of(const ConvexBody& other) const;

  std::string describe() const;

  const RatVec& params() const { return params_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }

 private:
  ConvexBody() = default;

  BodyKind kind_ = BodyKind::Box;
  size_t dim_ = 0;
  RatVec params_;                  // box widths / radius / graded scale
  std::vector<unsigned> degrees_;  // graded box
  std::vector<RatVec> vertices_;   // polytope
  RatMat vertex_inverse_;          // polytope: inverse of the vertex matrix
};

}  // namespace nilgrowth

#endif
