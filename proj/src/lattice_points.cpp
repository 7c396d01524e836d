#include "nilgrowth/lattice_points.hpp"

#include <cassert>

namespace nilgrowth {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Membership test for lambda * K on denominator-scaled integer points,
/// reduced to integer comparisons for the axis-monotone kinds.
struct ScaledBodyTest {
  enum class Mode { PerCoord, SumAbs, SumSq, Rational };
  Mode mode = Mode::Rational;
  std::vector<Int> coord_limits;  // PerCoord: |w_j| <= coord_limits[j]
  Int sum_limit{0};               // SumAbs
  Rat sum_sq_limit{0};            // SumSq
  const ConvexBody* body = nullptr;
  Rat lambda{0};
  Int denom{1};

  static ScaledBodyTest make(const ConvexBody& body, const Rat& lambda,
                             const Int& denom) {
    ScaledBodyTest t;
    t.body = &body;
    t.lambda = lambda;
    t.denom = denom;
    switch (body.kind()) {
      case BodyKind::Box:
      case BodyKind::GradedBox: {
        t.mode = Mode::PerCoord;
        for (const Rat& h : body.outer_box())
          t.coord_limits.push_back(rat_floor(lambda * h * denom));
        break;
      }
      case BodyKind::L1Ball: {
        t.mode = Mode::SumAbs;
        t.sum_limit = rat_floor(lambda * body.params()[0] * denom);
        break;
      }
      case BodyKind::L2Ball: {
        t.mode = Mode::SumSq;
        Rat r = lambda * body.params()[0] * denom;
        t.sum_sq_limit = r * r;
        break;
      }
      case BodyKind::Polytope:
        t.mode = Mode::Rational;
        break;
    }
    return t;
  }

  bool pass(const std::vector<Int>& w) const {
    switch (mode) {
      case Mode::PerCoord: {
        for (size_t j = 0; j < w.size(); ++j) {
          if (w[j] > coord_limits[j] || w[j] < -coord_limits[j]) return false;
        }
        return true;
      }
      case Mode::SumAbs: {
        Int s(0);
        for (const Int& q : w) s += abs(q);
        return s <= sum_limit;
      }
      case Mode::SumSq: {
        Int s(0);
        for (const Int& q : w) s += q * q;
        return Rat(s) <= sum_sq_limit;
      }
      case Mode::Rational: {
        RatVec v(w.size());
        for (size_t j = 0; j < w.size(); ++j) v[j] = rat(w[j], denom);
        return body->contains_scaled(v, lambda);
      }
    }
    return false;
  }

  /// Prune test on finalized pivot coordinates only (unset coords zero).
  bool partial_exceeds(const std::vector<Int>& w,
                       const std::vector<size_t>& pivots,
                       size_t finalized) const {
    switch (mode) {
      case Mode::PerCoord:
        return false;  // pivot ranges already enforce the box
      case Mode::SumAbs: {
        Int s(0);
        for (size_t t = 0; t < finalized; ++t) s += abs(w[pivots[t]]);
        return s > sum_limit;
      }
      case Mode::SumSq: {
        Int s(0);
        for (size_t t = 0; t < finalized; ++t) s += w[pivots[t]] * w[pivots[t]];
        return Rat(s) > sum_sq_limit;
      }
      case Mode::Rational:
        return false;
    }
    return false;
  }
};

struct Frame {
  const IntegerLattice* lat = nullptr;
  const ConvexBody* body = nullptr;
  std::optional<ScaledBodyTest> test;
  std::optional<ScaledBodyTest> exclude;  // skip points inside this one
  std::vector<Int> wmax;
  std::vector<size_t> pivot;
  BudgetMeter* meter = nullptr;
  const std::function<void(const RatVec&)>* visit = nullptr;
  const std::function<bool(const RatVec&)>* visit_stop = nullptr;
  bool stopped = false;
  Int count{0};
  bool interval_last = false;
  Rat lambda{1};
  std::vector<std::vector<Int>> scratch;  // per-depth coordinate buffers
};

RatVec to_point(const Frame& f, const std::vector<Int>& w) {
  const size_t d = f.lat->ambient_dim();
  RatVec x(d);
  for (size_t j = 0; j < d; ++j) x[j] = rat(w[j], f.lat->denominator());
  return x;
}

bool leaf_pass(const Frame& f, const std::vector<Int>& w) {
  if (f.test && !f.test->pass(w)) return false;
  if (!f.test) {
    for (size_t j = 0; j < w.size(); ++j)
      if (w[j] > f.wmax[j] || w[j] < -f.wmax[j]) return false;
  }
  if (f.exclude && f.exclude->pass(w)) return false;
  return true;
}

/// Feasible integer range of the last coefficient along a convex slice,
/// located by ternary search on the exact gauge plus two binary searches.
std::pair<Int, Int> last_level_interval(const Frame& f,
                                        const std::vector<Int>& w,
                                        const std::vector<Int>& row, Int lo,
                                        Int hi) {
  std::vector<Int> v(w.size());
  auto fill = [&](const Int& c) {
    for (size_t j = 0; j < w.size(); ++j) v[j] = w[j] + c * row[j];
  };
  auto feasible = [&](const Int& c) {
    fill(c);
    return f.test->pass(v);
  };
  auto gauge_sq = [&](const Int& c) {
    fill(c);
    return f.body->gauge(to_point(f, v)).value_sq;
  };

  if (lo > hi) return {Int(1), Int(0)};
  Int a = lo, b = hi;
  while (b - a > 2) {
    Int m1 = a + (b - a) / 3;
    Int m2 = b - (b - a) / 3;
    if (gauge_sq(m1) <= gauge_sq(m2))
      b = m2;
    else
      a = m1;
  }
  Int best = a;
  for (Int c = a + 1; c <= b; ++c)
    if (gauge_sq(c) < gauge_sq(best)) best = c;
  if (!feasible(best)) return {Int(1), Int(0)};

  Int llo = lo, lhi = best;
  while (llo < lhi) {
    Int mid = floor_div(llo + lhi, Int(2));
    if (feasible(mid))
      lhi = mid;
    else
      llo = mid + 1;
  }
  Int rlo = best, rhi = hi;
  while (rlo < rhi) {
    Int mid = ceil_div(rlo + rhi, Int(2));
    if (feasible(mid))
      rlo = mid;
    else
      rhi = mid - 1;
  }
  return {llo, rlo};
}

void recurse(Frame& f, size_t depth, const std::vector<Int>& w) {
  const IntMat& basis = f.lat->basis_int();
  const size_t r = basis.size();
  const size_t d = f.lat->ambient_dim();

  if (depth == r) {
    f.meter->charge();
    if (leaf_pass(f, w)) {
      if (f.visit_stop) {
        if (!(*f.visit_stop)(to_point(f, w))) f.stopped = true;
      } else if (f.visit) {
        (*f.visit)(to_point(f, w));
      } else {
        f.count += 1;
      }
    }
    return;
  }

  if (f.test && f.test->partial_exceeds(w, f.pivot, depth)) return;

  const std::vector<Int>& row = basis[depth];
  const size_t p = f.pivot[depth];
  // Rows below `depth` vanish at column p, so |w_p + c*row_p| <= wmax_p
  // pins the coefficient range exactly.
  Int lo = ceil_div(-f.wmax[p] - w[p], row[p]);
  Int hi = floor_div(f.wmax[p] - w[p], row[p]);
  if (lo > hi) return;

  const bool last = depth + 1 == r;
  if (last && !f.visit && !f.exclude && f.interval_last && f.body) {
    auto [a, b] = last_level_interval(f, w, row, lo, hi);
    if (a <= b) {
      Int n = b - a + 1;
      if (!n.fits_ulong_p())
        throw resource_error("lattice point count exceeds any budget");
      f.meter->charge(n.get_ui());
      f.count += n;
    } else {
      f.meter->charge();
    }
    return;
  }

  std::vector<Int>& w2 = f.scratch[depth];
  for (Int c = lo; c <= hi; ++c) {
    for (size_t j = 0; j < d; ++j) w2[j] = w[j] + c * row[j];
    recurse(f, depth + 1, w2);
    if (f.stopped) return;
  }
}

Frame make_frame(const IntegerLattice& lattice, const ConvexBody* body,
                 const Rat& lambda, const RatVec& box_bounds,
                 BudgetMeter& meter) {
  Frame f;
  f.lat = &lattice;
  f.body = body;
  f.lambda = lambda;
  f.meter = &meter;
  const size_t d = lattice.ambient_dim();
  f.wmax.resize(d);
  for (size_t j = 0; j < d; ++j)
    f.wmax[j] = rat_floor(box_bounds[j] * lattice.denominator());
  f.pivot.resize(lattice.rank());
  for (size_t t = 0; t < lattice.rank(); ++t) {
    size_t p = 0;
    while (lattice.basis_int()[t][p] == 0) ++p;
    f.pivot[t] = p;
  }
  if (body)
    f.test = ScaledBodyTest::make(*body, lambda, lattice.denominator());
  f.scratch.assign(lattice.rank(), std::vector<Int>(d, Int(0)));
  return f;
}

}  // namespace

void enumerate_box(const IntegerLattice& lattice, const RatVec& bounds,
                   BudgetMeter& meter,
                   const std::function<void(const RatVec&)>& visit) {
  Frame f = make_frame(lattice, nullptr, Rat(1), bounds, meter);
  f.visit = &visit;
  std::vector<Int> w(lattice.ambient_dim(), Int(0));
  recurse(f, 0, w);
}

Int count_points(const IntegerLattice& lattice, const ConvexBody& body,
                 const Rat& lambda, BudgetMeter& meter) {
  if (lambda < 0) return Int(0);
  RatVec bounds = body.outer_box();
  for (Rat& q : bounds) q *= lambda;
  Frame f = make_frame(lattice, &body, lambda, bounds, meter);
  f.interval_last = true;
  std::vector<Int> w(lattice.ambient_dim(), Int(0));
  recurse(f, 0, w);
  return f.count;
}

std::vector<RatVec> points_in_body(const IntegerLattice& lattice,
                                   const ConvexBody& body, const Rat& lambda,
                                   BudgetMeter& meter) {
  std::vector<RatVec> out;
  if (lambda < 0) return out;
  RatVec bounds = body.outer_box();
  for (Rat& q : bounds) q *= lambda;
  Frame f = make_frame(lattice, &body, lambda, bounds, meter);
  std::function<void(const RatVec&)> visit = [&](const RatVec& v) {
    out.push_back(v);
  };
  f.visit = &visit;
  std::vector<Int> w(lattice.ambient_dim(), Int(0));
  recurse(f, 0, w);
  return out;
}

void for_points_in_shell(const IntegerLattice& lattice, const ConvexBody& body,
                         const ConvexBody* inner, BudgetMeter& meter,
                         const std::function<bool(const RatVec&)>& visit) {
  RatVec bounds = body.outer_box();
  Frame f = make_frame(lattice, &body, Rat(1), bounds, meter);
  if (inner)
    f.exclude = ScaledBodyTest::make(*inner, Rat(1), lattice.denominator());
  f.visit_stop = &visit;
  std::vector<Int> w(lattice.ambient_dim(), Int(0));
  recurse(f, 0, w);
}

}  // namespace nilgrowth
