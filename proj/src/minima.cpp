#include "nilgrowth/minima.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "nilgrowth/errors.hpp"
#include "nilgrowth/lattice_points.hpp"

namespace nilgrowth {

SuccessiveMinima successive_minima(const IntegerLattice& lattice,
                                   const ConvexBody& body,
                                   const Budget& budget) {
  if (lattice.ambient_dim() != body.dim())
    throw usage_error("lattice and body dimensions differ");
  const size_t r = lattice.rank();
  if (r == 0) throw usage_error("successive minima of the zero lattice");

  // lambda_r is at most the largest basis-row gauge, and at least lambda_1,
  // which is at most the smallest one. Doubling the enumeration radius from
  // the small end keeps boxes tight for skewed bases.
  Rat lo_sq, hi_sq;
  for (size_t i = 0; i < r; ++i) {
    Rat g = body.gauge(lattice.basis_row(i)).value_sq;
    if (i == 0 || g < lo_sq) lo_sq = g;
    if (i == 0 || g > hi_sq) hi_sq = g;
  }
  assert(hi_sq > 0);
  Rat t(1);
  while (t * t < lo_sq) t *= 2;
  while (t * t > lo_sq && lo_sq > 0) t /= 2;
  if (t * t < lo_sq) t *= 2;

  BudgetMeter meter(budget.points, "minima enumeration");
  while (true) {
    std::vector<RatVec> pts = points_in_body(lattice, body, t, meter);

    std::vector<std::pair<Rat, RatVec>> by_gauge;  // (gauge^2, point)
    by_gauge.reserve(pts.size());
    for (RatVec& p : pts) {
      if (vec_is_zero(p)) continue;
      by_gauge.emplace_back(body.gauge(p).value_sq, std::move(p));
    }
    std::sort(by_gauge.begin(), by_gauge.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return vec_to_string(a.second) < vec_to_string(b.second);
              });

    SuccessiveMinima out;
    RatMat selected;
    for (const auto& [gsq, p] : by_gauge) {
      if (selected.size() == r) break;
      RatMat trial = selected;
      trial.push_back(p);
      if (mat_rank(trial) != trial.size()) continue;
      selected = std::move(trial);
      out.values.push_back(body.gauge(p));
      out.witnesses.push_back(p);
    }
    if (out.values.size() == r) return out;
    if (t * t > hi_sq)
      throw resource_error("minima enumeration missed independent vectors");
    t *= 2;
  }
}

MinkowskiReport minkowski_second_check(const IntegerLattice& lattice,
                                       const ConvexBody& body,
                                       const Budget& budget) {
  const size_t d = lattice.ambient_dim();
  if (lattice.rank() != d)
    throw usage_error("Minkowski check requires a full-rank lattice");
  MinkowskiReport rep;
  rep.dim = d;
  rep.minima = successive_minima(lattice, body, budget);
  rep.covolume = lattice.covolume();
  rep.volume = body.volume();

  Rat prod_sq(1);
  bool all_rational = true;
  Rat prod_val(1);
  for (const GaugeValue& g : rep.minima.values) {
    prod_sq *= g.value_sq;
    if (g.sqrt_form)
      all_rational = false;
    else
      prod_val *= g.value;
  }

  Rat four_d = rat_pow(Rat(4), static_cast<unsigned>(d));
  Rat num = four_d * rep.covolume * rep.covolume;
  rep.rho_sq_lo = num / (rep.volume.hi * rep.volume.hi * prod_sq);
  rep.rho_sq_hi = num / (rep.volume.lo * rep.volume.lo * prod_sq);

  if (all_rational && rep.volume.exact()) {
    rep.rho_exact = true;
    rep.rho = rat_pow(Rat(2), static_cast<unsigned>(d)) * rep.covolume /
              (rep.volume.lo * prod_val);
    assert(rep.rho * rep.rho == rep.rho_sq_lo);
  }
  rep.rho_approx = std::sqrt(rep.rho_sq_lo.get_d() / 2 + rep.rho_sq_hi.get_d() / 2);
  rep.rho_alt_approx = rep.rho_approx / four_d.get_d();

  Int fact(1);
  for (size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
  Rat fact_sq = Rat(fact) * Rat(fact);
  rep.verdict = rep.rho_sq_lo >= 1 && rep.rho_sq_hi <= fact_sq;
  return rep;
}

}  // namespace nilgrowth
