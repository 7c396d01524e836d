#include "doctest.h"

#include "nilgrowth/errors.hpp"
#include "nilgrowth/explore.hpp"
#include "nilgrowth/lattice.hpp"
#include "nilgrowth/lattice_points.hpp"
#include "nilgrowth/minima.hpp"
#include "nilgrowth/prng.hpp"

using namespace nilgrowth;

namespace {

RatVec rv(std::vector<long> v) {
  RatVec r;
  for (long x : v) r.push_back(Rat(x));
  return r;
}

IntegerLattice random_lattice(Prng& rng, unsigned d, unsigned rows) {
  std::vector<RatVec> rr;
  long den = static_cast<long>(rng.int_in(1, 3));
  for (unsigned i = 0; i < rows; ++i) {
    RatVec r(d);
    for (Rat& q : r) q = rat(static_cast<long>(rng.int_in(-4, 4)), den);
    rr.push_back(std::move(r));
  }
  return IntegerLattice::span(d, rr);
}

}  // namespace

TEST_CASE("span examples") {
  auto l = IntegerLattice::span(2, {rv({2, 0}), rv({0, 2}), rv({1, 1})});
  CHECK(l.rank() == 2);
  CHECK(l.basis_row(0) == rv({1, 1}));
  CHECK(l.basis_row(1) == rv({0, 2}));
  CHECK(l.covolume() == 2);

  auto zero = IntegerLattice::span(3, {});
  CHECK(zero.rank() == 0);

  auto gcd = IntegerLattice::span(1, {rv({6}), rv({10})});
  CHECK(gcd.basis_row(0) == rv({2}));

  CHECK_THROWS_AS(IntegerLattice::span(2, {rv({1, 2, 3})}), usage_error);
}

TEST_CASE("canonical form is idempotent and equality is field-wise") {
  Prng rng(3);
  for (unsigned t = 0; t < 40; ++t) {
    unsigned d = 1 + static_cast<unsigned>(rng.below(4));
    IntegerLattice l = random_lattice(rng, d, d + 1);
    CHECK(IntegerLattice::span(d, l.basis_rows()) == l);
    // random integer combinations stay inside
    if (l.rank() > 0) {
      RatVec combo(d, Rat(0));
      for (size_t i = 0; i < l.rank(); ++i)
        combo = vec_add(combo,
                        vec_scale(Rat(static_cast<long>(rng.int_in(-3, 3))),
                                  l.basis_row(i)));
      CHECK(l.contains(combo));
    }
  }
}

TEST_CASE("canonical form is invariant under unimodular regeneration") {
  Prng rng(808);
  for (unsigned t = 0; t < 30; ++t) {
    unsigned d = 2 + static_cast<unsigned>(rng.below(3));
    IntegerLattice l = random_lattice(rng, d, d);
    if (l.rank() < 2) continue;
    // replace the basis by random integer row operations: same lattice
    std::vector<RatVec> rows = l.basis_rows();
    for (unsigned op = 0; op < 6; ++op) {
      size_t i = rng.below(rows.size());
      size_t j = rng.below(rows.size());
      if (i == j) continue;
      rows[i] = vec_add(rows[i],
                        vec_scale(Rat(static_cast<long>(rng.int_in(-3, 3))),
                                  rows[j]));
    }
    std::swap(rows[0], rows[rows.size() - 1]);
    CHECK(IntegerLattice::span(d, rows) == l);
  }
}

TEST_CASE("minima on the euclidean disk carry sqrt-form gauges") {
  Budget bud;
  auto z2 = IntegerLattice::standard(2);
  auto m = successive_minima(z2, ConvexBody::l2_ball(2, Rat(1)), bud);
  CHECK(m.values[0].sqrt_form);
  CHECK(m.values[0].value_sq == 1);
  CHECK(m.values[1].value_sq == 1);
  // skewed: span{(2,0),(1,1)}: shortest is (1,1) with |.|^2 = 2
  auto skew = IntegerLattice::span(2, {rv({2, 0}), rv({1, 1})});
  auto ms = successive_minima(skew, ConvexBody::l2_ball(2, Rat(1)), bud);
  CHECK(ms.values[0].value_sq == 2);
  CHECK(ms.values[1].value_sq == 2);  // (1,-1) is independent with norm^2 2
}

TEST_CASE("Minkowski on the 3-ball straddles 6/pi") {
  Budget bud;
  auto rep = minkowski_second_check(IntegerLattice::standard(3),
                                    ConvexBody::l2_ball(3, Rat(1)), bud);
  CHECK(rep.verdict);
  CHECK(rep.rho_approx == doctest::Approx(6 / 3.14159265358979).epsilon(1e-6));
}

TEST_CASE("exploration of a partial-rank lattice stays within its span") {
  Budget bud;
  auto line = IntegerLattice::span(2, {rv({2, 1})});
  std::vector<ConvexBody> bodies;
  for (int j = 0; j < 4; ++j)
    bodies.push_back(ConvexBody::box({rat_pow(Rat(2), j), rat_pow(Rat(2), j)}));
  auto rep = explore(line, bodies, bud);
  CHECK(rep.change_count == 1);
  CHECK(rep.chain.back() == line);
  CHECK(rep.bound_ok);
}

TEST_CASE("membership decides by exact back-substitution") {
  auto l = IntegerLattice::span(2, {rv({1, 1}), rv({0, 2})});
  CHECK(l.contains(rv({1, 1})));
  CHECK(l.contains(rv({1, 3})));
  CHECK_FALSE(l.contains(rv({1, 0})));
  CHECK_FALSE(l.contains(RatVec{rat(1, 2), rat(1, 2)}));
  auto c = l.coordinates(rv({2, 4}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 1);
}

TEST_CASE("index examples and multiplicativity") {
  auto z2 = IntegerLattice::standard(2);
  CHECK(lattice_index(z2.scaled(2), z2).value == 4);
  CHECK(lattice_index(z2, z2).value == 1);
  auto l = IntegerLattice::span(2, {rv({1, 1}), rv({0, 2})});
  CHECK(lattice_index(l, z2).value == 2);

  // non-containment names a witness
  auto half = IntegerLattice::span(2, {RatVec{rat(1, 2), Rat(0)}, rv({0, 1})});
  CHECK_THROWS_WITH_AS(static_cast<void>(lattice_index(half, z2)),
                       doctest::Contains("containment fails"), usage_error);

  // rank drop means infinite index
  auto line = IntegerLattice::span(2, {rv({1, 0})});
  CHECK_FALSE(lattice_index(line, z2).finite);

  Prng rng(9);
  for (unsigned t = 0; t < 25; ++t) {
    unsigned d = 1 + static_cast<unsigned>(rng.below(3));
    IntegerLattice l3 = random_lattice(rng, d, d);
    if (l3.rank() != d) continue;
    IntegerLattice l2m = l3.scaled(Rat(static_cast<long>(rng.int_in(1, 3))));
    IntegerLattice l1m = l2m.scaled(Rat(static_cast<long>(rng.int_in(1, 3))));
    Int i13 = lattice_index(l1m, l3).value;
    Int i12 = lattice_index(l1m, l2m).value;
    Int i23 = lattice_index(l2m, l3).value;
    CHECK(i13 == i12 * i23);
  }
}

TEST_CASE("covolume worked values") {
  CHECK(IntegerLattice::standard(3).covolume() == 1);
  CHECK(IntegerLattice::span(2, {rv({1, 1}), rv({0, 2})}).covolume() == 2);
  CHECK(IntegerLattice::span(1, {rv({3})}).covolume() == 3);
  CHECK_THROWS_AS(IntegerLattice::zero(2).covolume(), usage_error);
  // partial rank: squared value is exact
  auto line = IntegerLattice::span(2, {rv({3, 4})});
  CHECK(line.covolume_squared() == 25);
  CHECK(line.covolume() == 5);
}

TEST_CASE("lattice sum and intersection") {
  auto a = IntegerLattice::span(2, {rv({2, 0}), rv({0, 1})});
  auto b = IntegerLattice::span(2, {rv({1, 0}), rv({0, 2})});
  CHECK(a.sum(b) == IntegerLattice::standard(2));
  CHECK(a.intersect(b) ==
        IntegerLattice::span(2, {rv({2, 0}), rv({0, 2})}));
  auto checker = IntegerLattice::span(2, {rv({1, 1}), rv({1, -1})});
  CHECK(checker.intersect(b) ==
        IntegerLattice::span(2, {rv({2, 0}), rv({0, 2})}));
}

TEST_CASE("successive minima worked examples") {
  Budget bud;
  auto z2 = IntegerLattice::standard(2);
  auto m1 = successive_minima(z2, ConvexBody::box({Rat(1), Rat(1)}), bud);
  CHECK(m1.values[0].value == 1);
  CHECK(m1.values[1].value == 1);

  auto m2 = successive_minima(z2, ConvexBody::box({Rat(2), rat(1, 2)}), bud);
  CHECK(m2.values[0].value == rat(1, 2));
  CHECK(m2.values[1].value == 2);

  auto l = IntegerLattice::span(2, {rv({1, 0}), rv({0, 3})});
  auto m3 = successive_minima(l, ConvexBody::box({Rat(1), Rat(1)}), bud);
  CHECK(m3.values[0].value == 1);
  CHECK(m3.values[1].value == 3);

  CHECK_THROWS_AS(
      static_cast<void>(successive_minima(
          IntegerLattice::zero(2), ConvexBody::box({Rat(1), Rat(1)}), bud)),
      usage_error);
}

TEST_CASE("lambda_1 agrees with a brute-force smallest gauge") {
  Prng rng(77);
  Budget bud;
  for (unsigned t = 0; t < 15; ++t) {
    IntegerLattice l = random_lattice(rng, 2, 2);
    if (l.rank() != 2) continue;
    ConvexBody body = ConvexBody::l1_ball(2, rat(3, 2));
    auto m = successive_minima(l, body, bud);
    // independent search over a crude integer window
    Rat best_sq(-1);
    const Int& den = l.denominator();
    for (long i = -12; i <= 12; ++i)
      for (long j = -12; j <= 12; ++j) {
        if (i == 0 && j == 0) continue;
        RatVec v = vec_add(vec_scale(Rat(i), l.basis_row(0)),
                           vec_scale(Rat(j), l.basis_row(1)));
        Rat g = body.gauge(v).value_sq;
        if (best_sq < 0 || g < best_sq) best_sq = g;
      }
    (void)den;
    CHECK(m.values[0].value_sq == best_sq);
  }
}

TEST_CASE("Minkowski worked examples with both normalizations") {
  Budget bud;
  auto z2 = IntegerLattice::standard(2);
  auto r1 = minkowski_second_check(z2, ConvexBody::box({Rat(1), Rat(1)}), bud);
  CHECK(r1.rho_exact);
  CHECK(r1.rho == 1);
  CHECK(r1.verdict);
  CHECK(r1.rho_alt_approx == doctest::Approx(1.0 / 16));

  auto r2 = minkowski_second_check(z2, ConvexBody::l2_ball(2, Rat(1)), bud);
  CHECK(r2.verdict);
  CHECK(r2.rho_approx == doctest::Approx(4 / 3.14159265358979).epsilon(1e-6));

  auto r3 =
      minkowski_second_check(z2, ConvexBody::box({Rat(2), rat(1, 2)}), bud);
  CHECK(r3.rho == 1);

  CHECK_THROWS_AS(static_cast<void>(minkowski_second_check(
                      IntegerLattice::span(2, {rv({1, 0})}),
                      ConvexBody::box({Rat(1), Rat(1)}), bud)),
                  usage_error);
}

TEST_CASE("Minkowski bound holds on randomized pairs") {
  Prng rng(123);
  Budget bud;
  unsigned done = 0;
  while (done < 40) {
    unsigned d = 1 + static_cast<unsigned>(rng.below(3));
    IntegerLattice l = random_lattice(rng, d, d);
    if (l.rank() != d) continue;
    ConvexBody body = rng.below(2) ? ConvexBody::l1_ball(d, rat(3, 2))
                                   : ConvexBody::box(RatVec(d, rat(3, 2)));
    auto rep = minkowski_second_check(l, body, bud);
    CHECK(rep.verdict);
    ++done;
  }
}

TEST_CASE("exploration worked examples") {
  Budget bud;
  auto z2 = IntegerLattice::standard(2);
  auto rep = explore(z2,
                     {ConvexBody::box({rat(3, 2), rat(1, 4)}),
                      ConvexBody::box({rat(3, 2), rat(3, 2)})},
                     bud);
  CHECK(rep.change_count == 2);
  CHECK(rep.bound == 4);
  CHECK(rep.bound_ok);
  CHECK(rep.chain[0].rank() == 1);
  CHECK(rep.chain[1] == z2);

  auto rep0 =
      explore(IntegerLattice::zero(2), {ConvexBody::box({Rat(1), Rat(1)})}, bud);
  CHECK(rep0.change_count == 0);

  std::vector<ConvexBody> intervals;
  for (int j = 0; j <= 4; ++j)
    intervals.push_back(ConvexBody::box({rat_pow(Rat(2), j)}));
  auto rep1 = explore(IntegerLattice::standard(1), intervals, bud);
  CHECK(rep1.change_count == 1);
  CHECK(rep1.bound == 2);
}

TEST_CASE("exploration rejects non-nested bodies") {
  Budget bud;
  CHECK_THROWS_AS(
      static_cast<void>(explore(IntegerLattice::standard(2),
                                {ConvexBody::box({Rat(2), Rat(2)}),
                                 ConvexBody::box({Rat(1), Rat(1)})},
                                bud)),
      usage_error);
}

TEST_CASE("adversarial d=3 instance achieves three changes") {
  Budget bud;
  RatVec u1 = rv({1, 1, 0}), u2 = rv({0, 1, 1}), u3 = rv({1, 0, 1});
  auto k1 = ConvexBody::polytope(
      {u1, vec_scale(rat(1, 8), u2), vec_scale(rat(1, 8), u3)});
  auto k2 = ConvexBody::polytope({u1, u2, u3});
  auto k3 = ConvexBody::box({Rat(2), Rat(2), Rat(2)});
  auto rep = explore(IntegerLattice::standard(3), {k1, k2, k3}, bud);
  CHECK(rep.change_count == 3);
  CHECK(rep.bound_ok);
  CHECK(rep.chain[0].rank() == 1);
  CHECK(rep.chain[1].rank() == 3);
  // the middle stage is the even-coordinate-sum sublattice of index 2
  CHECK(lattice_index(rep.chain[1], rep.chain[2]).value == 2);
}

TEST_CASE("every exploration change has index at least 2") {
  Prng rng(321);
  Budget bud;
  unsigned done = 0;
  while (done < 25) {
    unsigned d = 1 + static_cast<unsigned>(rng.below(3));
    IntegerLattice l = random_lattice(rng, d, d);
    if (l.rank() == 0) continue;
    std::vector<ConvexBody> bodies;
    Rat lam = rat(1, 2);
    for (int j = 0; j < 4; ++j) {
      bodies.push_back(ConvexBody::l1_ball(d, lam));
      lam *= 2;
    }
    auto rep = explore(l, bodies, bud);
    CHECK(rep.bound_ok);
    for (const auto& idx : rep.change_indices)
      if (idx) CHECK(*idx >= 2);
    ++done;
  }
}

TEST_CASE("point enumeration respects its budget") {
  Budget tiny;
  tiny.points = 10;
  BudgetMeter meter(tiny.points, "test");
  CHECK_THROWS_AS(static_cast<void>(points_in_body(
                      IntegerLattice::standard(2),
                      ConvexBody::box({Rat(10), Rat(10)}), Rat(1), meter)),
                  resource_error);
}

TEST_CASE("body containment checks are exact") {
  auto box = ConvexBody::box({Rat(1), Rat(1)});
  auto bigger = ConvexBody::box({Rat(1), Rat(2)});
  CHECK(box.subset_of(bigger));
  CHECK_FALSE(bigger.subset_of(box));
  auto disk = ConvexBody::l2_ball(2, Rat(1));
  CHECK(disk.subset_of(box));
  CHECK_FALSE(box.subset_of(disk));
  auto diamond = ConvexBody::l1_ball(2, Rat(1));
  CHECK(diamond.subset_of(disk));
  CHECK(disk.subset_of(diamond.scaled(2)));
  // l2 in l1 needs radius * sqrt(d): radius 1 disk inside l1 ball iff r >= sqrt(2)
  CHECK_FALSE(disk.subset_of(ConvexBody::l1_ball(2, rat(7, 5))));
  CHECK(disk.subset_of(ConvexBody::l1_ball(2, rat(3, 2))));
}

TEST_CASE("graded box volume and gauge") {
  auto f = ConvexBody::graded_box({1, 1, 2}, Rat(2));
  CHECK(f.volume().lo == 4 * 4 * 8);  // 2*2 x 2*2 x 2*4
  CHECK(f.contains(rv({2, -2, 4})));
  CHECK_FALSE(f.contains(rv({0, 0, 5})));
  CHECK(f.gauge(rv({0, 0, 8})).value == 2);
}

TEST_CASE("bodies are symmetric and scale monotonically") {
  Prng rng(555);
  std::vector<ConvexBody> bodies = {
      ConvexBody::box({rat(3, 2), rat(1, 2), Rat(2)}),
      ConvexBody::l1_ball(3, rat(5, 3)),
      ConvexBody::l2_ball(3, Rat(2)),
      ConvexBody::graded_box({1, 2, 2}, rat(3, 2)),
      ConvexBody::polytope({rv({1, 0, 0}), rv({1, 2, 0}), rv({0, 1, 1})})};
  for (const ConvexBody& k : bodies) {
    for (unsigned t = 0; t < 20; ++t) {
      RatVec v(3);
      for (Rat& q : v) q = rng.rat_in(3, 2);
      CHECK(k.contains(v) == k.contains(vec_scale(Rat(-1), v)));
      // lambda <= mu implies lambda K inside mu K
      CHECK(k.contains_scaled(v, rat(1, 2)) <= k.contains_scaled(v, Rat(1)));
      CHECK(k.contains_scaled(v, Rat(1)) <= k.contains_scaled(v, Rat(3)));
    }
    CHECK(k.subset_of(k));
    CHECK(k.subset_of(k.scaled(2)));
  }
}

TEST_CASE("l2 volume intervals certify pi powers") {
  auto disk = ConvexBody::l2_ball(2, Rat(2));
  auto [lo, hi] = std::pair{disk.volume().lo, disk.volume().hi};
  CHECK(lo < hi);
  CHECK(lo.get_d() == doctest::Approx(4 * 3.14159265).epsilon(1e-6));
  auto ball3 = ConvexBody::l2_ball(3, Rat(1));
  CHECK(ball3.volume().lo.get_d() == doctest::Approx(4.18879).epsilon(1e-4));
}
