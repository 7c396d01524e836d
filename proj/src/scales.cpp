#include "nilgrowth/scales.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "nilgrowth/errors.hpp"
#include "nilgrowth/lattice_points.hpp"

namespace nilgrowth {

namespace {

void finish_changes(ScaleReport& rep) {
  for (size_t i = 0; i + 1 < rep.canonical_forms.size(); ++i)
    if (rep.canonical_forms[i] != rep.canonical_forms[i + 1])
      rep.change_scales.push_back(rep.scales[i]);
  rep.change_count = rep.change_scales.size();
}

size_t floor_log2_int(const Int& n) {
  assert(n >= 1);
  return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

}  // namespace

ScaleReport subgroup_scales_abelian(const ConcreteGroup& g,
                                    const std::vector<ConcreteGroup::El>& h_gens,
                                    unsigned n_max, const Budget& budget) {
  if (g.kind() != ConcreteGroup::Kind::FiniteAbelian ||
      !g.standard_generators())
    throw usage_error(
        "abelian subgroup scales need a finite abelian product with standard "
        "generators");
  const auto& moduli = g.moduli();
  const size_t k = moduli.size();

  // Lift H to the lattice spanned by the generators and the moduli relations.
  std::vector<RatVec> rows;
  for (const auto& gen : h_gens) {
    RatVec r(k);
    for (size_t i = 0; i < k; ++i) r[i] = Rat(static_cast<long>(gen[i]));
    rows.push_back(std::move(r));
  }
  std::vector<RatVec> base_rows;
  for (size_t i = 0; i < k; ++i)
    if (moduli[i] > 0) {
      RatVec r(k, Rat(0));
      r[i] = static_cast<long>(moduli[i]);
      base_rows.push_back(r);
      rows.push_back(std::move(r));
    }
  IntegerLattice lift = IntegerLattice::span(k, rows);

  auto word_length = [&](const RatVec& p) {
    long long total = 0;
    for (size_t i = 0; i < k; ++i) {
      assert(p[i].get_den() == 1);
      long long v = p[i].get_num().get_si();
      if (moduli[i] == 0) {
        total += std::llabs(v);
      } else {
        long long r = v % moduli[i];
        if (r < 0) r += moduli[i];
        total += std::min(r, moduli[i] - r);
      }
    }
    return total;
  };

  ScaleReport rep;
  std::string stable_form;
  for (unsigned n = 0; n <= n_max; ++n) {
    rep.scales.push_back(n);
    if (!stable_form.empty()) {
      rep.canonical_forms.push_back(stable_form);
      continue;
    }
    long long len_cap = 1LL << n;
    RatVec bounds(k);
    for (size_t i = 0; i < k; ++i) {
      long long cap = len_cap;
      if (moduli[i] > 0) cap = std::min(cap, moduli[i] / 2 + 1);
      bounds[i] = static_cast<long>(cap);
    }
    BudgetMeter meter(budget.points, "abelian scale enumeration");
    SpanAccumulator acc(k);
    for (const RatVec& r : base_rows) acc.add(r);
    enumerate_box(lift, bounds, meter, [&](const RatVec& p) {
      if (word_length(p) <= len_cap) acc.add(p);
    });
    std::string form = acc.lattice().canonical_string();
    rep.canonical_forms.push_back(form);
    if (acc.lattice() == lift) stable_form = form;  // chain has topped out
  }
  finish_changes(rep);
  return rep;
}

ScaleReport subgroup_scales_heisenberg(const std::vector<HeisEl>& h_gens,
                                       unsigned n_max, const Budget& budget) {
  HeisenbergSubgroup h = HeisenbergSubgroup::generate(h_gens);
  const Int& m = h.center_modulus();

  std::vector<HeisEl> std_gens{HeisEl{Int(1), Int(0), Int(0)},
                               HeisEl{Int(0), Int(1), Int(0)}};
  HeisBallDP dp(std_gens);

  ScaleReport rep;
  HeisenbergSubgroup cur = HeisenbergSubgroup::trivial();
  std::string stable_form;
  for (unsigned n = 0; n <= n_max; ++n) {
    rep.scales.push_back(n);
    if (!stable_form.empty()) {
      rep.canonical_forms.push_back(stable_form);
      continue;
    }
    dp.grow_to(1u << n, budget.elements);
    dp.for_each_cell([&](long long a, long long b, const IntervalSet& set) {
      auto offset = h.central_offset(Int(static_cast<long>(a)),
                                     Int(static_cast<long>(b)));
      if (!offset) return;
      // Candidates in this cell: c in the fiber with c = offset (mod m).
      long long first = 0;
      bool have_first = false;
      Int diff_gcd(0);
      if (m == 0) {
        if (!offset->fits_slong_p() || !set.contains(offset->get_si()))
          return;
        first = offset->get_si();
        have_first = true;
      } else {
        long long mm = m.get_si();
        long long o = ((offset->get_si() % mm) + mm) % mm;
        for (const auto& [lo, hi] : set.intervals()) {
          long long c = lo + ((o - lo) % mm + mm) % mm;
          if (c > hi) continue;
          if (!have_first) {
            first = c;
            have_first = true;
          } else {
            diff_gcd = int_gcd(diff_gcd, Int(static_cast<long>(c - first)));
          }
          long long last = c + ((hi - c) / mm) * mm;
          if (last > c) diff_gcd = int_gcd(diff_gcd, Int(static_cast<long>(mm)));
        }
      }
      if (!have_first) return;
      HeisEl g{Int(static_cast<long>(a)), Int(static_cast<long>(b)),
               Int(static_cast<long>(first))};
      if (!cur.member(g)) cur = cur.join_element(g);
      if (diff_gcd > 0) {
        HeisEl z{Int(0), Int(0), diff_gcd};
        if (!cur.member(z)) cur = cur.join_element(z);
      }
    });
    std::string form = cur.canonical_string();
    rep.canonical_forms.push_back(form);
    if (cur == h) stable_form = form;
  }
  finish_changes(rep);
  return rep;
}

ScaleReport abelian_relation_scales(const std::vector<long long>& moduli,
                                    unsigned max_scale, const Budget& budget) {
  const size_t k = moduli.size();
  std::vector<RatVec> rows;
  for (size_t i = 0; i < k; ++i)
    if (moduli[i] > 0) {
      RatVec r(k, Rat(0));
      r[i] = static_cast<long>(moduli[i]);
      rows.push_back(std::move(r));
    }
  IntegerLattice ker = IntegerLattice::span(k, rows);

  std::vector<ConvexBody> bodies;
  for (unsigned n = 2; n <= max_scale + 1; ++n)
    bodies.push_back(ConvexBody::l1_ball(k, rat_pow(Rat(2), n)));
  ExplorationReport ex = explore(ker, bodies, budget);

  ScaleReport rep;
  for (unsigned n = 2; n <= max_scale + 1; ++n) {
    rep.scales.push_back(n);
    rep.canonical_forms.push_back(ex.chain[n - 2].canonical_string());
  }
  finish_changes(rep);
  // Only scales up to max_scale are reported as changes; the last entry
  // exists to decide a change at max_scale itself.
  rep.scales.pop_back();
  rep.canonical_forms.pop_back();
  return rep;
}

InjectivityCheck injectivity_radius_check(long long n, unsigned k) {
  if (n < 2) throw usage_error("cyclic order must be >= 2");
  if (k < 1) throw usage_error("scale k must be >= 1");
  InjectivityCheck out;
  out.radius = (1u << (k - 1)) - 1;
  const long long rho = out.radius;

  // Canonical labeled-BFS serialization of the radius-rho ball around 0.
  auto serialize = [&](bool cyclic) {
    std::vector<long long> order{0};
    std::map<long long, size_t> index{{0, 0}};
    auto dist_ok = [&](long long v) {
      if (!cyclic) return std::llabs(v) <= rho;
      long long r = ((v % n) + n) % n;
      return std::min(r, n - r) <= rho;
    };
    auto canon = [&](long long v) { return cyclic ? ((v % n) + n) % n : v; };
    std::ostringstream os;
    for (size_t i = 0; i < order.size(); ++i) {
      long long v = order[i];
      for (long long step : {+1, -1}) {
        long long w = canon(v + step);
        if (!dist_ok(w)) {
          os << i << (step > 0 ? "+" : "-") << "x;";
          continue;
        }
        auto it = index.find(w);
        if (it == index.end()) {
          index.emplace(w, order.size());
          order.push_back(w);
          it = index.find(w);
        }
        os << i << (step > 0 ? "+" : "-") << it->second << ";";
      }
    }
    return os.str();
  };

  out.isomorphic = serialize(false) == serialize(true);
  return out;
}

GeneratingCheck finite_index_generating_check(
    const ConcreteGroup& g, const std::vector<ConcreteGroup::El>& h_gens,
    const Budget& budget) {
  std::vector<ConcreteGroup::El> all = g.all_elements(budget);
  std::set<ConcreteGroup::El> everyone(all.begin(), all.end());

  auto closure = [&](std::vector<ConcreteGroup::El> seed) {
    std::set<ConcreteGroup::El> h;
    h.insert(g.identity());
    std::vector<ConcreteGroup::El> frontier{g.identity()};
    std::vector<ConcreteGroup::El> sym;
    for (const auto& s : seed) {
      sym.push_back(g.canon(s));
      sym.push_back(g.inv(s));
    }
    while (!frontier.empty()) {
      std::vector<ConcreteGroup::El> next;
      for (const auto& v : frontier)
        for (const auto& s : sym) {
          auto w = g.mul(v, s);
          if (h.insert(w).second) {
            if (h.size() > budget.elements)
              throw resource_error("subgroup closure budget exceeded");
            next.push_back(std::move(w));
          }
        }
      frontier = std::move(next);
    }
    return h;
  };

  std::set<ConcreteGroup::El> h = closure(h_gens);
  GeneratingCheck out;
  out.group_order = Int(static_cast<unsigned long>(everyone.size()));
  out.subgroup_order = Int(static_cast<unsigned long>(h.size()));
  assert(everyone.size() % h.size() == 0);
  out.index = out.group_order / out.subgroup_order;
  unsigned n = static_cast<unsigned>(out.index.get_ui());
  out.ball_radius = 2 * n - 1;

  std::vector<ConcreteGroup::El> ball = g.ball_elements(out.ball_radius, budget);
  std::vector<ConcreteGroup::El> seed;
  for (const auto& v : ball)
    if (h.count(v)) seed.push_back(v);
  out.generates = closure(seed) == h;
  return out;
}

ChainCheck chain_count_check(const std::vector<IntegerLattice>& chain,
                             const std::vector<IntegerLattice>& subchain) {
  if (chain.size() != subchain.size() || chain.empty())
    throw usage_error("chains must be nonempty and of equal length");
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    lattice_index(chain[i], chain[i + 1]);       // containment check
    lattice_index(subchain[i], subchain[i + 1]);
  }
  ChainCheck out;
  for (size_t i = 0; i < chain.size(); ++i) {
    LatticeIndex idx = lattice_index(subchain[i], chain[i]);
    if (!idx.finite)
      throw usage_error("infinite index at chain position " +
                        std::to_string(i));
    if (idx.value > out.max_index) out.max_index = idx.value;
  }
  std::set<std::string> main_forms, sub_forms;
  for (const auto& l : chain) main_forms.insert(l.canonical_string());
  for (const auto& l : subchain) sub_forms.insert(l.canonical_string());
  out.distinct_main = main_forms.size();
  out.distinct_sub = sub_forms.size();
  out.bound = (1 + floor_log2_int(out.max_index)) * out.distinct_sub;
  out.ok = out.distinct_main <= out.bound;
  return out;
}

ChainCheck chain_count_restricted(const std::vector<IntegerLattice>& chain,
                                  const IntegerLattice& gprime) {
  std::vector<IntegerLattice> subchain;
  subchain.reserve(chain.size());
  for (const auto& l : chain) subchain.push_back(l.intersect(gprime));
  ChainCheck out = chain_count_check(chain, subchain);
  // Cor form: the ceiling uses [ambient : G'] which dominates every
  // [H_i : H_i cap G'].
  IntegerLattice ambient = IntegerLattice::standard(gprime.ambient_dim());
  LatticeIndex amb = lattice_index(gprime, ambient);
  if (amb.finite) {
    out.bound = (1 + floor_log2_int(amb.value)) * out.distinct_sub;
    out.ok = out.distinct_main <= out.bound;
  }
  return out;
}

}  // namespace nilgrowth
