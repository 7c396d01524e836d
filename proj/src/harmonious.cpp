#include "nilgrowth/harmonious.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "nilgrowth/convex_body.hpp"
#include "nilgrowth/errors.hpp"
#include "nilgrowth/lattice_points.hpp"

namespace nilgrowth {

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Tri HarmoniousVerdict::conclusion() const {
  for (Tri t : {additive, bracket_closed, diamond_closed})
    if (t == Tri::False) return Tri::False;
  for (Tri t : {additive, bracket_closed, diamond_closed})
    if (t == Tri::Inconclusive) return Tri::Inconclusive;
  return Tri::True;
}

ConstantTable ConstantTable::defaults(unsigned step) {
  ConstantTable t;
  t.step = step;
  if (step <= 1) {
    t.c1 = t.c2 = 1;
    t.provenance = ConstantProvenance::ProvenSmallStep;
    return t;
  }
  if (step == 2) {
    t.c1 = t.c2 = 2;
    t.provenance = ConstantProvenance::ProvenSmallStep;
    return t;
  }
  Int lcm(1);
  for (const LiePolynomial& level : zassenhaus_terms(step))
    for (const LiePolynomialTerm& term : level)
      lcm = int_lcm(lcm, term.coefficient.get_den());
  t.c1 = lcm;
  Int c2(1);
  for (unsigned i = 0; i < 3 * (step - 1); ++i) c2 *= t.c1;
  t.c2 = c2;
  t.provenance = ConstantProvenance::ZassenhausLcm;
  return t;
}

ConstantTable ConstantTable::override(unsigned step, Int c1, Int c2) {
  if (c1 < 1 || c2 < 1) throw usage_error("constants must be >= 1");
  return {step, std::move(c1), std::move(c2), ConstantProvenance::UserOverride};
}

std::vector<RatVec> enumerate_subgroup(const BasisPtr& algebra,
                                       const std::vector<RatVec>& generators,
                                       const EnumerationOptions& opts) {
  std::set<std::string> seen;
  std::vector<RatVec> out;
  std::deque<RatVec> frontier;
  auto push = [&](const RatVec& v) {
    std::string key = vec_to_string(v);
    if (!seen.insert(key).second) return false;
    if (seen.size() > opts.max_elements)
      throw resource_error("subgroup enumeration element budget exceeded");
    out.push_back(v);
    frontier.push_back(v);
    return true;
  };
  std::vector<RatVec> sym;
  for (const RatVec& g : generators) {
    sym.push_back(g);
    sym.push_back(vec_scale(Rat(-1), g));
  }
  push(RatVec(algebra->dim(), Rat(0)));
  for (unsigned depth = 0; depth < opts.max_word_length; ++depth) {
    std::deque<RatVec> level;
    std::swap(level, frontier);
    if (level.empty()) break;
    for (const RatVec& v : level) {
      for (const RatVec& g : sym) {
        RatVec w = algebra->bch(v, g);
        if (!LieElement(algebra, w).pnorm_leq(opts.pnorm_cap)) continue;
        push(w);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RatVec& a, const RatVec& b) {
    return vec_to_string(a) < vec_to_string(b);
  });
  return out;
}

HarmoniousVerdict is_harmonious(const GradedLattice& L,
                                unsigned product_depth) {
  HarmoniousVerdict v;
  v.additive = Tri::True;  // a lattice is an additive subgroup by construction
  if (L.bracket_closed()) {
    v.bracket_closed = Tri::True;
  } else {
    v.bracket_closed = Tri::False;
    auto w = L.bracket_witness();
    v.bracket_witness = "[" + vec_to_string(w->first) + "," +
                        vec_to_string(w->second) + "] escapes the lattice";
  }

  const BasisPtr& algebra = L.algebra();
  const IntegerLattice& lat = L.lattice();
  if (algebra->step() <= 2) {
    // u <> v - u - v = [u,v]/2 is bilinear, so basis pairs decide closure.
    v.diamond_closed = Tri::True;
    for (size_t i = 0; i < lat.rank() && v.diamond_closed == Tri::True; ++i)
      for (size_t j = 0; j < lat.rank(); ++j) {
        RatVec p = algebra->bch(lat.basis_row(i), lat.basis_row(j));
        if (!lat.contains(p)) {
          v.diamond_closed = Tri::False;
          v.diamond_witness = vec_to_string(lat.basis_row(i)) + " <> " +
                              vec_to_string(lat.basis_row(j)) + " = " +
                              vec_to_string(p) + " escapes";
          break;
        }
      }
    return v;
  }

  // Step >= 3: the correction terms are no longer bilinear; probe products
  // of basis words to the depth budget and refute or stay inconclusive.
  std::vector<RatVec> words;
  for (size_t i = 0; i < lat.rank(); ++i) {
    words.push_back(lat.basis_row(i));
    words.push_back(vec_scale(Rat(-1), lat.basis_row(i)));
  }
  std::vector<RatVec> frontier = words;
  for (unsigned depth = 0; depth < product_depth; ++depth) {
    std::vector<RatVec> next;
    for (const RatVec& u : frontier)
      for (const RatVec& g : words) {
        RatVec p = algebra->bch(u, g);
        if (!lat.contains(p)) {
          v.diamond_closed = Tri::False;
          v.diamond_witness = vec_to_string(u) + " <> " + vec_to_string(g) +
                              " = " + vec_to_string(p) + " escapes";
          return v;
        }
        next.push_back(std::move(p));
      }
    frontier = std::move(next);
    if (frontier.size() > 4096) frontier.resize(4096);
  }
  v.diamond_closed = Tri::Inconclusive;
  v.diamond_witness = "closure unrefuted to product depth " +
                      std::to_string(product_depth);
  return v;
}

HarmoniousVerdict is_harmonious(const GroupModel& G,
                                const EnumerationOptions& opts) {
  HarmoniousVerdict v;
  v.diamond_closed = Tri::True;  // a subgroup is closed by definition
  std::vector<RatVec> sample = enumerate_subgroup(G.algebra, G.generators, opts);

  v.additive = Tri::Inconclusive;
  v.bracket_closed = Tri::Inconclusive;
  const size_t cap = std::min<size_t>(sample.size(), 64);
  for (size_t i = 0; i < cap; ++i) {
    for (size_t j = i; j < cap; ++j) {
      RatVec s = vec_add(sample[i], sample[j]);
      if (!G.member(s)) {
        v.additive = Tri::False;
        v.additive_witness = vec_to_string(sample[i]) + " + " +
                             vec_to_string(sample[j]) + " = " +
                             vec_to_string(s) + " is not in the subgroup";
        break;
      }
      RatVec w = G.algebra->bracket(sample[i], sample[j]);
      if (!G.member(w)) {
        v.bracket_closed = Tri::False;
        v.bracket_witness = "[" + vec_to_string(sample[i]) + "," +
                            vec_to_string(sample[j]) + "] = " +
                            vec_to_string(w) + " is not in the subgroup";
      }
    }
    if (v.additive == Tri::False) break;
  }
  if (v.additive != Tri::False)
    v.additive_witness = "no refutation on " + std::to_string(cap) +
                         " sampled elements";
  if (v.bracket_closed != Tri::False)
    v.bracket_witness = v.additive_witness;
  return v;
}

namespace {

IntegerLattice span_of_sample(const BasisPtr& algebra,
                              const std::vector<RatVec>& sample) {
  SpanAccumulator acc(algebra->dim());
  for (const RatVec& v : sample) acc.add(v);
  return acc.lattice();
}

}  // namespace

HarmoniousConstruction h_minus(const GroupModel& gamma,
                               const ConstantTable& constants,
                               const EnumerationOptions& opts) {
  std::vector<RatVec> sample =
      enumerate_subgroup(gamma.algebra, gamma.generators, opts);
  IntegerLattice log_span = span_of_sample(gamma.algebra, sample);
  GradedLattice result(gamma.algebra, log_span.scaled(Rat(constants.c1)));

  HarmoniousConstruction out{result, is_harmonious(result), true, ""};
  if (out.verdict.refuted())
    throw bound_violation(
        "H_- is not harmonious with C1 = " + constants.c1.get_str() +
        " (constant too small): " + out.verdict.bracket_witness +
        out.verdict.diamond_witness);

  // C1 * log Gamma inside the result, result inside log Gamma.
  for (const RatVec& v : sample) {
    RatVec scaled = vec_scale(Rat(constants.c1), v);
    if (!result.lattice().contains(scaled)) {
      out.containment_ok = false;
      out.containment_witness =
          "C1 * " + vec_to_string(v) + " escapes log H_-";
      return out;
    }
  }
  if (gamma.member)
    for (size_t i = 0; i < result.lattice().rank(); ++i) {
      RatVec row = result.lattice().basis_row(i);
      if (!gamma.member(row)) {
        out.containment_ok = false;
        out.containment_witness =
            "log H_- basis vector " + vec_to_string(row) + " is not in Gamma";
        return out;
      }
    }
  return out;
}

HarmoniousConstruction h_plus(const GroupModel& gamma,
                              const ConstantTable& constants,
                              const EnumerationOptions& opts) {
  std::vector<RatVec> sample =
      enumerate_subgroup(gamma.algebra, gamma.generators, opts);
  IntegerLattice log_span = span_of_sample(gamma.algebra, sample);
  GradedLattice closed =
      bracket_closure(gamma.algebra, log_span.scaled(rat(1) / Rat(constants.c1)));
  GradedLattice result(gamma.algebra,
                       closed.lattice().scaled(Rat(constants.c1)));

  HarmoniousConstruction out{result, is_harmonious(result), true, ""};
  if (out.verdict.refuted())
    throw bound_violation(
        "H_+ is not harmonious with C1 = " + constants.c1.get_str() +
        " (constant too small): " + out.verdict.bracket_witness +
        out.verdict.diamond_witness);

  // log Gamma inside the result; C2 * result inside log Gamma.
  for (const RatVec& v : sample)
    if (!result.lattice().contains(v)) {
      out.containment_ok = false;
      out.containment_witness =
          vec_to_string(v) + " from log Gamma escapes log H_+";
      return out;
    }
  if (gamma.member)
    for (size_t i = 0; i < result.lattice().rank(); ++i) {
      RatVec row =
          vec_scale(Rat(constants.c2), result.lattice().basis_row(i));
      if (!gamma.member(row)) {
        out.containment_ok = false;
        out.containment_witness = "C2 * log H_+ basis vector " +
                                  vec_to_string(row) + " is not in Gamma";
        return out;
      }
    }
  return out;
}

GroupModel lattice_group(const GradedLattice& L, const std::string& name) {
  GroupModel g;
  g.algebra = L.algebra();
  IntegerLattice lat = L.lattice();
  for (size_t i = 0; i < lat.rank(); ++i) g.generators.push_back(lat.basis_row(i));
  g.member = [lat](const RatVec& v) { return lat.contains(v); };
  g.name = name;
  return g;
}

Int multiplicative_index(const GroupModel& sub, const GroupModel& super,
                         const Budget& budget) {
  for (const RatVec& g : sub.generators)
    if (!super.member(g))
      throw usage_error("subgroup generator " + vec_to_string(g) +
                        " is not in " + super.name);
  const BasisPtr& algebra = super.algebra;
  std::vector<RatVec> gens;
  for (const RatVec& g : super.generators) {
    gens.push_back(g);
    gens.push_back(vec_scale(Rat(-1), g));
  }
  std::vector<RatVec> reps{RatVec(algebra->dim(), Rat(0))};
  std::deque<size_t> queue{0};
  auto same_coset = [&](const RatVec& x, const RatVec& y) {
    // Sub x = Sub y iff x y^{-1} in Sub.
    return sub.member(algebra->bch(x, vec_scale(Rat(-1), y)));
  };
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    for (const RatVec& g : gens) {
      RatVec cand = algebra->bch(reps[i], g);
      bool found = false;
      for (const RatVec& r : reps)
        if (same_coset(cand, r)) {
          found = true;
          break;
        }
      if (!found) {
        reps.push_back(cand);
        if (reps.size() > budget.cosets)
          throw resource_error("coset enumeration budget exceeded (index "
                               "infinite or too large)");
        queue.push_back(reps.size() - 1);
      }
    }
  }
  return Int(static_cast<long>(reps.size()));
}

SandwichReport index_sandwich_bound_check(const GroupModel& gamma,
                                          const ConstantTable& constants,
                                          const EnumerationOptions& opts,
                                          const Budget& budget) {
  HarmoniousConstruction lo = h_minus(gamma, constants, opts);
  HarmoniousConstruction hi = h_plus(gamma, constants, opts);

  SandwichReport rep{gamma.name,
                     constants.c1,
                     constants.c2,
                     lo.lattice,
                     hi.lattice,
                     Int(0),
                     Int(0),
                     Int(0),
                     false,
                     false,
                     lo.verdict.conclusion(),
                     hi.verdict.conclusion(),
                     lo.containment_ok && hi.containment_ok};

  LatticeIndex additive =
      lattice_index(lo.lattice.lattice(), hi.lattice.lattice());
  if (!additive.finite)
    throw usage_error("sandwich lattices have different ranks");
  rep.additive_index = additive.value;

  rep.mult_index = multiplicative_index(lattice_group(lo.lattice, "H_-"),
                                        lattice_group(hi.lattice, "H_+"),
                                        budget);
  rep.equality_ok = rep.additive_index == rep.mult_index;

  Int bound(1);
  for (size_t i = 0; i < gamma.algebra->dim(); ++i)
    bound *= constants.c1 * constants.c2;
  rep.bound = bound;
  rep.bound_ok = rep.additive_index <= bound;
  return rep;
}

Int folner_count(const GradedLattice& L, const Rat& lambda,
                 const Budget& budget) {
  if (L.lattice().rank() != L.algebra()->dim())
    throw usage_error("Folner counting requires a full-rank lattice");
  std::vector<unsigned> degrees;
  for (size_t i = 0; i < L.algebra()->dim(); ++i)
    degrees.push_back(L.algebra()->degree_of(i));
  ConvexBody box = ConvexBody::graded_box(std::move(degrees), lambda);
  BudgetMeter meter(budget.points, "Folner counting");
  return count_points(L.lattice(), box, Rat(1), meter);
}

}  // namespace nilgrowth
