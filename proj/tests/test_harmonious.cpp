#include "doctest.h"

#include "nilgrowth/errors.hpp"
#include "nilgrowth/harmonious.hpp"
#include "nilgrowth/heis_models.hpp"
#include "nilgrowth/heisenberg.hpp"
#include "nilgrowth/prng.hpp"

using namespace nilgrowth;

namespace {

IntegerLattice lat3(std::vector<RatVec> rows) {
  return IntegerLattice::span(3, rows);
}

RatVec v3(const Rat& a, const Rat& b, const Rat& c) { return RatVec{a, b, c}; }

}  // namespace

TEST_CASE("bracket closure of the Heisenberg generators is Z^3") {
  auto basis = heisenberg_basis();
  auto g = bracket_closure(basis,
                           std::vector<LieElement>{heis(1, 0, 0), heis(0, 1, 0)});
  CHECK(g.lattice() == IntegerLattice::standard(3));
  CHECK(g.bracket_closed());

  // an already-closed lattice is a fixed point
  auto again = bracket_closure(basis, g.lattice());
  CHECK(again.lattice() == g.lattice());

  // a single element spans a line
  auto single =
      bracket_closure(basis, std::vector<LieElement>{heis(2, 1, rat(1, 2))});
  CHECK(single.lattice().rank() == 1);
  CHECK(single.lattice().contains(v3(2, 1, rat(1, 2))));
}

TEST_CASE("integer-entry algebra lattice is bracket-closed but not diamond-closed") {
  auto basis = heisenberg_basis();
  GradedLattice z3(basis, IntegerLattice::standard(3));
  CHECK(z3.bracket_closed());
  HarmoniousVerdict v = is_harmonious(z3);
  CHECK(v.diamond_closed == Tri::False);  // (1,0,0) <> (0,1,0) has center 1/2
  CHECK(v.conclusion() == Tri::False);
}

TEST_CASE("the sandwich lattices are harmonious, conclusively at step 2") {
  auto basis = heisenberg_basis();
  GradedLattice outer(basis, lat3({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, rat(1, 2))}));
  GradedLattice inner(basis, lat3({v3(2, 0, 0), v3(0, 2, 0), v3(0, 0, 1)}));
  CHECK(is_harmonious(outer).conclusion() == Tri::True);
  CHECK(is_harmonious(inner).conclusion() == Tri::True);
}

TEST_CASE("log of the integer Heisenberg group is not additive") {
  GroupModel gamma = integer_heisenberg_model();
  // the canonical witness
  CHECK(gamma.member(v3(1, 0, 0)));
  CHECK(gamma.member(v3(0, 1, 0)));
  CHECK_FALSE(gamma.member(v3(1, 1, 0)));
  EnumerationOptions opts;
  opts.max_word_length = 4;
  opts.pnorm_cap = 8;
  HarmoniousVerdict v = is_harmonious(gamma, opts);
  CHECK(v.additive == Tri::False);
  CHECK(v.conclusion() == Tri::False);
}

TEST_CASE("h_minus and h_plus recover the integer Heisenberg sandwich") {
  GroupModel gamma = integer_heisenberg_model();
  ConstantTable constants = ConstantTable::defaults(2);
  CHECK(constants.c1 == 2);
  CHECK(constants.c2 == 2);
  EnumerationOptions opts;
  opts.max_word_length = 6;
  opts.pnorm_cap = 8;

  auto lo = h_minus(gamma, constants, opts);
  CHECK(lo.lattice.lattice() == lat3({v3(2, 0, 0), v3(0, 2, 0), v3(0, 0, 1)}));
  CHECK(lo.verdict.conclusion() == Tri::True);
  CHECK(lo.containment_ok);

  auto hi = h_plus(gamma, constants, opts);
  CHECK(hi.lattice.lattice() ==
        lat3({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, rat(1, 2))}));
  CHECK(hi.verdict.conclusion() == Tri::True);
  CHECK(hi.containment_ok);

  // C1 = 1 yields span_Z(log Gamma) itself, which is harmonious but fails
  // the containment log H_- inside log Gamma; the construction reports it.
  auto too_small = h_minus(gamma, ConstantTable::override(2, Int(1), Int(1)), opts);
  CHECK_FALSE(too_small.containment_ok);
}

TEST_CASE("abelian case: h_minus with C1 = 1 is the log span itself") {
  auto basis = HallBasis::make(2, 1);  // abelian, dimension 2
  GroupModel gamma;
  gamma.algebra = basis;
  gamma.generators = {RatVec{Rat(2), Rat(0)}, RatVec{Rat(0), Rat(3)}};
  IntegerLattice expect = IntegerLattice::span(
      2, {RatVec{Rat(2), Rat(0)}, RatVec{Rat(0), Rat(3)}});
  gamma.member = [expect](const RatVec& v) { return expect.contains(v); };
  gamma.name = "2Z x 3Z";
  ConstantTable one = ConstantTable::defaults(1);
  EnumerationOptions opts;
  opts.max_word_length = 4;
  opts.pnorm_cap = 16;
  auto lo = h_minus(gamma, one, opts);
  CHECK(lo.lattice.lattice() == expect);
  auto hi = h_plus(gamma, one, opts);
  CHECK(hi.lattice.lattice() == expect);
}

TEST_CASE("one-parameter subgroup: h_minus is the scaled line") {
  auto basis = heisenberg_basis();
  GroupModel gamma;
  gamma.algebra = basis;
  gamma.generators = {v3(1, 0, 0)};
  gamma.member = [](const RatVec& v) {
    return v[0].get_den() == 1 && v[1] == 0 && v[2] == 0;
  };
  gamma.name = "<x>";
  EnumerationOptions opts;
  opts.max_word_length = 5;
  opts.pnorm_cap = 8;
  auto lo = h_minus(gamma, ConstantTable::defaults(2), opts);
  CHECK(lo.lattice.lattice() == IntegerLattice::span(3, {v3(2, 0, 0)}));
  CHECK(lo.containment_ok);
}

TEST_CASE("h_plus of an already harmonious lattice is a fixed point") {
  auto basis = heisenberg_basis();
  GradedLattice outer(basis, lat3({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, rat(1, 2))}));
  GroupModel gamma = lattice_group(outer, "exp(outer)");
  EnumerationOptions opts;
  opts.max_word_length = 5;
  opts.pnorm_cap = 6;
  auto hi = h_plus(gamma, ConstantTable::defaults(2), opts);
  CHECK(hi.lattice.lattice() == outer.lattice());
  CHECK(hi.containment_ok);
}

TEST_CASE("abelian sandwich has index one") {
  auto basis = HallBasis::make(2, 1);
  IntegerLattice z2 = IntegerLattice::standard(2);
  GroupModel gamma;
  gamma.algebra = basis;
  gamma.generators = {RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}};
  gamma.member = [z2](const RatVec& v) { return z2.contains(v); };
  gamma.name = "Z^2";
  EnumerationOptions opts;
  opts.max_word_length = 4;
  opts.pnorm_cap = 8;
  SandwichReport rep =
      index_sandwich_bound_check(gamma, ConstantTable::defaults(1), opts);
  CHECK(rep.additive_index == 1);
  CHECK(rep.mult_index == 1);
  CHECK(rep.equality_ok);
}

TEST_CASE("multiplicative index by coset enumeration") {
  auto basis = heisenberg_basis();
  GradedLattice outer(basis, lat3({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, rat(1, 2))}));
  GradedLattice inner(basis, lat3({v3(2, 0, 0), v3(0, 2, 0), v3(0, 0, 1)}));
  GroupModel sup = lattice_group(outer, "H_+");
  GroupModel sub = lattice_group(inner, "H_-");
  CHECK(multiplicative_index(sub, sup) == 8);
  CHECK(multiplicative_index(sup, sup) == 1);
  CHECK(multiplicative_index(integer_heisenberg_model(), sup) == 2);

  // non-containment carries a witness
  GroupModel half;
  half.algebra = basis;
  half.generators = {v3(rat(1, 3), 0, 0)};
  half.member = [](const RatVec&) { return true; };
  half.name = "thirds";
  CHECK_THROWS_AS(static_cast<void>(multiplicative_index(half, sub)), usage_error);
}

TEST_CASE("index sandwich: integer Heisenberg numbers") {
  GroupModel gamma = integer_heisenberg_model();
  EnumerationOptions opts;
  opts.max_word_length = 6;
  opts.pnorm_cap = 8;
  SandwichReport rep =
      index_sandwich_bound_check(gamma, ConstantTable::defaults(2), opts);
  CHECK(rep.additive_index == 8);
  CHECK(rep.mult_index == 8);
  CHECK(rep.bound == 64);
  CHECK(rep.equality_ok);
  CHECK(rep.bound_ok);
  CHECK(rep.containment_ok);
}

TEST_CASE("Prop 4.8 equality on random finite-index subgroups") {
  Prng rng(99);
  EnumerationOptions opts;
  opts.max_word_length = 5;
  opts.pnorm_cap = 12;
  for (unsigned t = 0; t < 10; ++t) {
    long p = static_cast<long>(rng.int_in(1, 3));
    long q = static_cast<long>(rng.int_in(1, 3));
    long r = static_cast<long>(rng.int_in(1, 4));
    HeisenbergSubgroup h = HeisenbergSubgroup::generate(
        {HeisEl{Int(p), Int(0), Int(0)}, HeisEl{Int(0), Int(q), Int(0)},
         HeisEl{Int(0), Int(0), Int(r)}});
    GroupModel gamma = heis_subgroup_model(h, "random");
    SandwichReport rep =
        index_sandwich_bound_check(gamma, ConstantTable::defaults(2), opts);
    CHECK(rep.equality_ok);
    CHECK(rep.bound_ok);
  }
}

TEST_CASE("Folner counting against a brute-force oracle") {
  auto basis = heisenberg_basis();
  GradedLattice z3(basis, IntegerLattice::standard(3));
  // brute force at lambda = 4: |a|,|b| <= 4, |c| <= 16
  long long direct = 0;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -16; c <= 16; ++c) {
        (void)a;
        (void)b;
        (void)c;
        ++direct;
      }
  CHECK(folner_count(z3, Rat(4)) == Int(static_cast<long>(direct)));
  // origin only below the shortest quasi-norm
  CHECK(folner_count(z3, rat(1, 2)) == 1);
  // scaling: doubling the lattice divides the count by about 2^dim
  Int big = folner_count(z3, Rat(32));
  Int half = folner_count(GradedLattice(basis, IntegerLattice::standard(3).scaled(2)),
                          Rat(32));
  CHECK(rat_abs(Rat(big) / Rat(half) - 8) < rat(1, 4));
}

TEST_CASE("Lemma 4.9 scaling closure on enumerated Heisenberg elements") {
  GroupModel gamma = integer_heisenberg_model();
  EnumerationOptions opts;
  opts.max_word_length = 4;
  opts.pnorm_cap = 6;
  std::vector<RatVec> sample =
      enumerate_subgroup(gamma.algebra, gamma.generators, opts);
  // X in 2 log Gamma, Y in log Gamma => X + Y in log Gamma
  for (size_t i = 0; i < std::min<size_t>(sample.size(), 40); ++i)
    for (size_t j = 0; j < std::min<size_t>(sample.size(), 40); ++j) {
      RatVec x = vec_scale(Rat(2), sample[i]);
      CHECK(gamma.member(vec_add(x, sample[j])));
    }
}

TEST_CASE("constant tables encode the step defaults") {
  auto t1 = ConstantTable::defaults(1);
  CHECK(t1.c1 == 1);
  CHECK(t1.c2 == 1);
  auto t3 = ConstantTable::defaults(3);
  CHECK(t3.c1 == 6);  // lcm of 2 and 6
  CHECK(t3.c2 == Int(6 * 6) * Int(6 * 6) * Int(6 * 6));  // 6^6
  CHECK(t3.provenance == ConstantProvenance::ZassenhausLcm);
  auto t4 = ConstantTable::defaults(4);
  CHECK(t4.c1 == 24);
  CHECK_THROWS_AS(ConstantTable::override(2, Int(0), Int(1)), usage_error);
}

TEST_CASE("homogeneous dimension of the Heisenberg grading is 4") {
  CHECK(homogeneous_dimension(*heisenberg_basis()) == 4);
  CHECK(homogeneous_dimension(*HallBasis::make(2, 3)) == 2 + 2 + 6);
}
