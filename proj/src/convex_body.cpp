#include "nilgrowth/convex_body.hpp"

#include <mpfr.h>

#include <cassert>
#include <cmath>
#include <mutex>
#include <sstream>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

double GaugeValue::approx() const {
  return sqrt_form ? std::sqrt(value_sq.get_d()) : value.get_d();
}

std::string GaugeValue::str() const {
  if (!sqrt_form) return rat_to_string(value);
  return "sqrt(" + rat_to_string(value_sq) + ")";
}

std::pair<Rat, Rat> pi_bounds() {
  static std::mutex mu;
  static bool ready = false;
  static Rat lo, hi;
  std::lock_guard<std::mutex> lock(mu);
  if (!ready) {
    mpfr_t pi;
    mpf_t f;
    mpfr_init2(pi, 256);
    mpf_init2(f, 256);
    mpfr_const_pi(pi, MPFR_RNDD);
    mpfr_get_f(f, pi, MPFR_RNDD);
    mpq_class qlo;
    mpq_set_f(qlo.get_mpq_t(), f);
    mpfr_const_pi(pi, MPFR_RNDU);
    mpfr_get_f(f, pi, MPFR_RNDU);
    mpq_class qhi;
    mpq_set_f(qhi.get_mpq_t(), f);
    mpfr_clear(pi);
    mpf_clear(f);
    lo = qlo;
    hi = qhi;
    assert(lo < hi);
    ready = true;
  }
  return {lo, hi};
}

ConvexBody ConvexBody::box(RatVec half_widths) {
  for (const Rat& h : half_widths)
    if (h <= 0) throw usage_error("box half-widths must be positive");
  ConvexBody b;
  b.kind_ = BodyKind::Box;
  b.dim_ = half_widths.size();
  b.params_ = std::move(half_widths);
  return b;
}

ConvexBody ConvexBody::l1_ball(size_t dim, const Rat& radius) {
  if (radius <= 0) throw usage_error("l1 ball radius must be positive");
  ConvexBody b;
  b.kind_ = BodyKind::L1Ball;
  b.dim_ = dim;
  b.params_ = {radius};
  return b;
}

ConvexBody ConvexBody::l2_ball(size_t dim, const Rat& radius) {
  if (radius <= 0) throw usage_error("l2 ball radius must be positive");
  ConvexBody b;
  b.kind_ = BodyKind::L2Ball;
  b.dim_ = dim;
  b.params_ = {radius};
  return b;
}

ConvexBody ConvexBody::polytope(std::vector<RatVec> vertices) {
  if (vertices.empty()) throw usage_error("polytope needs vertices");
  const size_t d = vertices[0].size();
  if (vertices.size() != d)
    throw usage_error(
        "polytope kind takes exactly dim independent vertex generators");
  RatMat m;
  for (const RatVec& v : vertices) {
    if (v.size() != d) throw usage_error("polytope vertex dimension mismatch");
    m.push_back(v);
  }
  if (mat_det(m) == 0)
    throw usage_error("polytope vertices must be linearly independent");
  // Invert the vertex matrix: coordinates of x over the vertices are x * V^-1.
  RatMat aug = mat_zero(d, 2 * d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) aug[i][j] = m[i][j];
    aug[i][d + i] = 1;
  }
  rref(aug);
  RatMat inv = mat_zero(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];

  ConvexBody b;
  b.kind_ = BodyKind::Polytope;
  b.dim_ = d;
  b.vertices_ = std::move(vertices);
  b.vertex_inverse_ = std::move(inv);
  return b;
}

ConvexBody ConvexBody::graded_box(std::vector<unsigned> degrees,
                                  const Rat& scale) {
  if (scale <= 0) throw usage_error("graded box scale must be positive");
  for (unsigned d : degrees)
    if (d < 1) throw usage_error("graded box degrees must be >= 1");
  ConvexBody b;
  b.kind_ = BodyKind::GradedBox;
  b.dim_ = degrees.size();
  b.degrees_ = std::move(degrees);
  b.params_ = {scale};
  return b;
}

GaugeValue ConvexBody::gauge(const RatVec& v) const {
  if (v.size() != dim_) throw usage_error("gauge of mismatched dimension");
  GaugeValue g;
  switch (kind_) {
    case BodyKind::Box: {
      Rat m(0);
      for (size_t i = 0; i < dim_; ++i) {
        Rat q = rat_abs(v[i]) / params_[i];
        if (q > m) m = q;
      }
      g.value = m;
      break;
    }
    case BodyKind::L1Ball: {
      Rat s(0);
      for (const Rat& q : v) s += rat_abs(q);
      g.value = s / params_[0];
      break;
    }
    case BodyKind::L2Ball: {
      Rat s(0);
      for (const Rat& q : v) s += q * q;
      g.sqrt_form = true;
      g.value_sq = s / (params_[0] * params_[0]);
      return g;
    }
    case BodyKind::Polytope: {
      Rat s(0);
      for (size_t j = 0; j < dim_; ++j) {
        Rat c(0);
        for (size_t i = 0; i < dim_; ++i) c += v[i] * vertex_inverse_[i][j];
        s += rat_abs(c);
      }
      g.value = s;
      break;
    }
    case BodyKind::GradedBox: {
      Rat m(0);
      for (size_t i = 0; i < dim_; ++i) {
        Rat q = rat_abs(v[i]) / rat_pow(params_[0], degrees_[i]);
        if (q > m) m = q;
      }
      g.value = m;
      break;
    }
  }
  g.value_sq = g.value * g.value;
  return g;
}

Rat ConvexBody::gauge_sq_lower(const RatVec& partial) const {
  if (kind_ == BodyKind::Polytope) return Rat(0);
  GaugeValue g = gauge(partial);
  return g.value_sq;
}

bool ConvexBody::contains(const RatVec& v) const {
  return contains_scaled(v, Rat(1));
}

bool ConvexBody::contains_scaled(const RatVec& v, const Rat& lambda) const {
  if (lambda < 0) return false;
  GaugeValue g = gauge(v);
  return g.value_sq <= lambda * lambda &&
         (g.sqrt_form || g.value <= lambda);
}

RatVec ConvexBody::outer_box() const {
  RatVec r(dim_);
  switch (kind_) {
    case BodyKind::Box:
      return params_;
    case BodyKind::L1Ball:
    case BodyKind::L2Ball:
      for (auto& q : r) q = params_[0];
      return r;
    case BodyKind::Polytope:
      for (size_t j = 0; j < dim_; ++j) {
        Rat m(0);
        for (const RatVec& v : vertices_)
          if (rat_abs(v[j]) > m) m = rat_abs(v[j]);
        r[j] = m;
      }
      return r;
    case BodyKind::GradedBox:
      for (size_t i = 0; i < dim_; ++i) r[i] = rat_pow(params_[0], degrees_[i]);
      return r;
  }
  return r;
}

Rat ConvexBody::outer_radius() const {
  Rat m(0);
  for (const Rat& q : outer_box())
    if (q > m) m = q;
  return m;
}

VolumeInterval ConvexBody::volume() const {
  switch (kind_) {
    case BodyKind::Box: {
      Rat v(1);
      for (const Rat& h : params_) v *= 2 * h;
      return {v, v};
    }
    case BodyKind::L1Ball: {
      Rat v = rat_pow(2 * params_[0], static_cast<unsigned>(dim_));
      Int f(1);
      for (size_t i = 2; i <= dim_; ++i) f *= static_cast<long>(i);
      v /= Rat(f);
      return {v, v};
    }
    case BodyKind::Polytope: {
      RatMat m;
      for (const RatVec& v : vertices_) m.push_back(v);
      Rat det = rat_abs(mat_det(std::move(m)));
      Rat v = det * rat_pow(Rat(2), static_cast<unsigned>(dim_));
      Int f(1);
      for (size_t i = 2; i <= dim_; ++i) f *= static_cast<long>(i);
      v /= Rat(f);
      return {v, v};
    }
    case BodyKind::GradedBox: {
      Rat v(1);
      for (size_t i = 0; i < dim_; ++i) v *= 2 * rat_pow(params_[0], degrees_[i]);
      return {v, v};
    }
    case BodyKind::L2Ball: {
      // vol = pi^floor(d/2) * coeff(d) * rho^d with rational coeff.
      auto [pilo, pihi] = pi_bounds();
      unsigned d = static_cast<unsigned>(dim_);
      unsigned pi_pow = d / 2;
      Rat coeff;
      if (d % 2 == 0) {
        // pi^{d/2} / (d/2)!
        Int f(1);
        for (unsigned i = 2; i <= d / 2; ++i) f *= static_cast<long>(i);
        coeff = rat(Int(1), f);
      } else {
        // 2^d * ((d-1)/2)! * pi^{(d-1)/2} / d!
        Int num(1);
        for (unsigned i = 2; i <= (d - 1) / 2; ++i) num *= static_cast<long>(i);
        num *= rat_pow(Rat(2), d).get_num();
        Int den(1);
        for (unsigned i = 2; i <= d; ++i) den *= static_cast<long>(i);
        coeff = rat(num, den);
      }
      Rat rd = rat_pow(params_[0], d);
      Rat lo = coeff * rat_pow(pilo, pi_pow) * rd;
      Rat hi = coeff * rat_pow(pihi, pi_pow) * rd;
      if (pi_pow == 0) return {lo, lo};
      return {lo, hi};
    }
  }
  throw usage_error("unreachable body kind");
}

ConvexBody ConvexBody::scaled(const Rat& lambda) const {
  if (lambda <= 0) throw usage_error("body scaling requires lambda > 0");
  switch (kind_) {
    case BodyKind::Box: {
      RatVec h = params_;
      for (Rat& q : h) q *= lambda;
      return box(std::move(h));
    }
    case BodyKind::L1Ball:
      return l1_ball(dim_, lambda * params_[0]);
    case BodyKind::L2Ball:
      return l2_ball(dim_, lambda * params_[0]);
    case BodyKind::Polytope: {
      std::vector<RatVec> vs = vertices_;
      for (RatVec& v : vs) v = vec_scale(lambda, v);
      return polytope(std::move(vs));
    }
    case BodyKind::GradedBox: {
      RatVec h(dim_);
      for (size_t i = 0; i < dim_; ++i)
        h[i] = lambda * rat_pow(params_[0], degrees_[i]);
      return box(std::move(h));
    }
  }
  throw usage_error("unreachable body kind");
}

namespace {

/// Extreme points when the body is polyhedral (empty for the l2 ball).
std::vector<RatVec> extreme_points(const ConvexBody& b) {
  std::vector<RatVec> pts;
  switch (b.kind()) {
    case BodyKind::Box:
    case BodyKind::GradedBox: {
      RatVec h = b.outer_box();
      size_t d = b.dim();
      for (size_t mask = 0; mask < (size_t{1} << d); ++mask) {
        RatVec v(d);
        for (size_t i = 0; i < d; ++i)
          v[i] = (mask >> i) & 1 ? h[i] : Rat(-h[i]);
        pts.push_back(std::move(v));
      }
      return pts;
    }
    case BodyKind::L1Ball: {
      for (size_t i = 0; i < b.dim(); ++i) {
        RatVec v(b.dim(), Rat(0));
        v[i] = b.params()[0];
        pts.push_back(v);
        v[i] = -b.params()[0];
        pts.push_back(std::move(v));
      }
      return pts;
    }
    case BodyKind::Polytope: {
      for (const RatVec& v : b.vertices()) {
        pts.push_back(v);
        pts.push_back(vec_scale(Rat(-1), v));
      }
      return pts;
    }
    case BodyKind::L2Ball:
      return {};
  }
  return pts;
}

}  // namespace

bool ConvexBody::subset_of(const ConvexBody& other) const {
  if (dim_ != other.dim_)
    throw usage_error("containment check with mismatched dimensions");
  if (kind_ != BodyKind::L2Ball) {
    for (const RatVec& v : extreme_points(*this))
      if (!other.contains(v)) return false;
    return true;
  }
  const Rat& rho = params_[0];
  switch (other.kind_) {
    case BodyKind::Box:
    case BodyKind::GradedBox: {
      RatVec h = other.outer_box();
      for (const Rat& q : h)
        if (rho > q) return false;
      return true;
    }
    case BodyKind::L2Ball:
      return rho <= other.params_[0];
    case BodyKind::L1Ball:
      // sup of the l1 norm over the sphere is rho * sqrt(d).
      return rho * rho * static_cast<long>(dim_) <=
             other.params_[0] * other.params_[0];
    case BodyKind::Polytope: {
      // sup over the sphere of sum_i |(v V^-1)_i| equals
      // rho * max_signs ||sum_i s_i w_i||_2 with w_i the inverse columns.
      for (size_t mask = 0; mask < (size_t{1} << dim_); ++mask) {
        RatVec u(dim_, Rat(0));
        for (size_t j = 0; j < dim_; ++j) {
          Rat s = (mask >> j) & 1 ? Rat(1) : Rat(-1);
          for (size_t i = 0; i < dim_; ++i)
            u[i] += s * other.vertex_inverse_[i][j];
        }
        Rat norm_sq(0);
        for (const Rat& q : u) norm_sq += q * q;
        if (rho * rho * norm_sq > 1) return false;
      }
      return true;
    }
  }
  throw usage_error("unreachable body kind");
}

std::string ConvexBody::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case BodyKind::Box: {
      os << "box[";
      for (size_t i = 0; i < params_.size(); ++i)
        os << (i ? "," : "") << rat_to_string(params_[i]);
      os << "]";
      break;
    }
    case BodyKind::L1Ball:
      os << "l1(" << rat_to_string(params_[0]) << ")";
      break;
    case BodyKind::L2Ball:
      os << "l2(" << rat_to_string(params_[0]) << ")";
      break;
    case BodyKind::Polytope: {
      os << "poly{";
      for (size_t i = 0; i < vertices_.size(); ++i)
        os << (i ? ";" : "") << vec_to_string(vertices_[i]);
      os << "}";
      break;
    }
    case BodyKind::GradedBox: {
      os << "graded(" << rat_to_string(params_[0]) << ";deg=";
      for (size_t i = 0; i < degrees_.size(); ++i)
        os << (i ? "," : "") << degrees_[i];
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace nilgrowth
