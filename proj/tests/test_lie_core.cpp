#include "doctest.h"

#include "nilgrowth/errors.hpp"
#include "nilgrowth/free_algebra.hpp"
#include "nilgrowth/hall_basis.hpp"
#include "nilgrowth/heisenberg.hpp"
#include "nilgrowth/lie_element.hpp"
#include "nilgrowth/prng.hpp"

using namespace nilgrowth;

namespace {

LieElement rand_el(Prng& rng, const BasisPtr& basis) {
  RatVec c(basis->dim());
  for (Rat& q : c) q = rng.rat_in(3, 3);
  return LieElement(basis, std::move(c));
}

std::string uv_name(unsigned v) { return v == 0 ? "X" : "Y"; }

}  // namespace

TEST_CASE("Hall basis dimensions follow the Witt formula") {
  CHECK(HallBasis::make(2, 2)->dim() == 3);
  CHECK(HallBasis::make(2, 3)->dim() == 5);
  CHECK(HallBasis::make(1, 4)->dim() == 1);
  CHECK(HallBasis::make(2, 6)->dim() == 23);
  CHECK(HallBasis::make(3, 4)->dim() == 32);
  // per-degree counts
  auto b = HallBasis::make(2, 5);
  auto [f4, l4] = b->degree_range(4);
  CHECK(l4 - f4 == 3);
  auto [f5, l5] = b->degree_range(5);
  CHECK(l5 - f5 == 6);
}

TEST_CASE("basis construction guards its ceilings") {
  CHECK_THROWS_AS(HallBasis::make(0, 2), usage_error);
  CHECK_THROWS_AS(HallBasis::make(5, 2), resource_error);
  CHECK_THROWS_AS(HallBasis::make(2, 7), resource_error);
  CHECK_THROWS_AS(HallBasis::make(4, 5), resource_error);  // dim 294 > 120
}

TEST_CASE("structure table is antisymmetric and satisfies Jacobi") {
  auto basis = HallBasis::make(2, 4);
  Prng rng(11);
  for (unsigned t = 0; t < 20; ++t) {
    LieElement x = rand_el(rng, basis), y = rand_el(rng, basis),
               z = rand_el(rng, basis);
    CHECK(bracket(x, y) == -bracket(y, x));
    CHECK(bracket(x, x).is_zero());
    LieElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Heisenberg bracket matches the matrix commutator") {
  CHECK(bracket(heis(1, 0, 0), heis(0, 1, 0)) == heis(0, 0, 1));
  Prng rng(5);
  for (unsigned t = 0; t < 25; ++t) {
    Rat a = rng.rat_in(4, 3), b = rng.rat_in(4, 3), c = rng.rat_in(4, 3);
    Rat x = rng.rat_in(4, 3), y = rng.rat_in(4, 3), z = rng.rat_in(4, 3);
    // [(a,b,c),(x,y,z)] = (0,0, ay - xb)
    CHECK(bracket(heis(a, b, c), heis(x, y, z)) == heis(0, 0, a * y - x * b));
  }
}

TEST_CASE("BCH on the Heisenberg model reproduces the printed product") {
  CHECK(bch(heis(1, 0, 0), heis(0, 1, 0)) == heis(1, 1, rat(1, 2)));
  LieElement x = heis(rat(2, 3), 1, rat(-1, 2));
  CHECK(bch(x, LieElement::zero(heisenberg_basis())) == x);
  CHECK(bch(x, -x).is_zero());
}

TEST_CASE("one-parameter subgroups: aX <> bX = (a+b) X") {
  auto basis = HallBasis::make(2, 4);
  Prng rng(17);
  for (unsigned t = 0; t < 20; ++t) {
    LieElement x = rand_el(rng, basis);
    Rat a = rng.rat_in(5, 4), b = rng.rat_in(5, 4);
    CHECK(bch(x.scaled(a), x.scaled(b)) == x.scaled(a + b));
  }
}

TEST_CASE("BCH associativity is exact across supported shapes") {
  for (auto [k, s] : {std::pair<unsigned, unsigned>{2, 3},
                      {3, 2},
                      {2, 4}}) {
    auto basis = HallBasis::make(k, s);
    Prng rng(100 * k + s);
    for (unsigned t = 0; t < 10; ++t) {
      LieElement x = rand_el(rng, basis), y = rand_el(rng, basis),
                 z = rand_el(rng, basis);
      CHECK(bch(bch(x, y), z) == bch(x, bch(y, z)));
    }
  }
}

TEST_CASE("Zassenhaus terms match the printed coefficients") {
  TreePtr X = tree_leaf(0), Y = tree_leaf(1), XY = tree_node(X, Y);
  auto terms = zassenhaus_terms(4);
  REQUIRE(terms.size() == 3);

  REQUIRE(terms[0].size() == 1);
  CHECK(terms[0][0].coefficient == rat(-1, 2));
  CHECK(tree_cmp(terms[0][0].monomial, XY) == 0);
  CHECK(terms[0][0].degree == 2);

  REQUIRE(terms[1].size() == 2);
  for (const auto& t : terms[1]) {
    if (tree_cmp(t.monomial, tree_node(X, XY)) == 0)
      CHECK(t.coefficient == rat(1, 6));
    else if (tree_cmp(t.monomial, tree_node(Y, XY)) == 0)
      CHECK(t.coefficient == rat(1, 3));
    else
      FAIL("unexpected degree-3 monomial ",
           tree_to_string(t.monomial, uv_name));
  }

  // Degree 4: -(1/24)([X,[X,[X,Y]]] + 3[Y,[X,[X,Y]]] + 3[Y,[Y,[X,Y]]]).
  REQUIRE(terms[2].size() == 3);
  for (const auto& t : terms[2]) {
    if (tree_cmp(t.monomial, tree_node(X, tree_node(X, XY))) == 0)
      CHECK(t.coefficient == rat(-1, 24));
    else if (tree_cmp(t.monomial, tree_node(Y, tree_node(X, XY))) == 0)
      CHECK(t.coefficient == rat(-1, 8));
    else if (tree_cmp(t.monomial, tree_node(Y, tree_node(Y, XY))) == 0)
      CHECK(t.coefficient == rat(-1, 8));
    else
      FAIL("unexpected degree-4 monomial");
  }

  CHECK(zassenhaus_terms(1).empty());
}

TEST_CASE("Zassenhaus identity holds through the BCH group law") {
  for (auto [k, s] :
       {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    auto basis = HallBasis::make(k, s);
    Prng rng(7000 + 10 * k + s);
    for (unsigned t = 0; t < 10; ++t) {
      LieElement x = rand_el(rng, basis), y = rand_el(rng, basis);
      LieElement rhs = bch(x, y);
      for (const LiePolynomial& level : basis->zassenhaus_terms())
        rhs = bch(rhs, eval_polynomial(level, x, y));
      CHECK(rhs == x + y);
    }
  }
}

TEST_CASE("BCH degree-by-degree terms match the classical series") {
  auto basis = HallBasis::make(2, 4);
  const auto& terms = basis->bch_terms();
  TreePtr X = tree_leaf(0), Y = tree_leaf(1), XY = tree_node(X, Y);
  // X + Y + [X,Y]/2 + [X,[X,Y]]/12 - [Y,[X,Y]]/12 - [Y,[X,[X,Y]]]/24
  REQUIRE(terms.size() == 4);
  CHECK(terms[1].size() == 1);
  CHECK(terms[1][0].coefficient == rat(1, 2));
  for (const auto& t : terms[2]) {
    if (tree_cmp(t.monomial, tree_node(X, XY)) == 0)
      CHECK(t.coefficient == rat(1, 12));
    else
      CHECK(t.coefficient == rat(-1, 12));
  }
  REQUIRE(terms[3].size() == 1);
  CHECK(terms[3][0].coefficient == rat(-1, 24));
  CHECK(tree_cmp(terms[3][0].monomial, tree_node(Y, tree_node(X, XY))) == 0);
}

TEST_CASE("free-algebra oracle: exp(X)exp(Y) = exp(bch series) at degree 5") {
  // Independent of the Hall projection path: expand both sides as
  // truncated associative series and compare word coefficients.
  const unsigned s = 5;
  FreePoly x = FreePoly::generator(0, 2, s);
  FreePoly y = FreePoly::generator(1, 2, s);
  FreePoly lhs = FreePoly::exp(x) * FreePoly::exp(y);
  FreePoly z = FreePoly::log(lhs);
  CHECK((FreePoly::exp(z) - lhs).is_zero());
}

TEST_CASE("commutator law: exact at step 2, supported in degrees >= 3 after") {
  auto b2 = heisenberg_basis();
  Prng rng(23);
  for (unsigned t = 0; t < 10; ++t) {
    LieElement x = rand_el(rng, b2), y = rand_el(rng, b2);
    LieElement comm = bch(bch(bch(x, y), -x), -y);
    CHECK(comm == bracket(x, y));
  }
  auto b3 = HallBasis::make(2, 3);
  for (unsigned t = 0; t < 10; ++t) {
    LieElement x = rand_el(rng, b3), y = rand_el(rng, b3);
    LieElement diff = bch(bch(bch(x, y), -x), -y) - bracket(x, y);
    CHECK(diff.graded_component(1).is_zero());
    CHECK(diff.graded_component(2).is_zero());
    // and the classical degree-3 correction [X,[X,Y]]/2 + [Y,[X,Y]]/2
    LieElement expected =
        (bracket(x, bracket(x, y)) + bracket(y, bracket(x, y))).scaled(rat(1, 2));
    CHECK(diff.graded_component(3) == expected.graded_component(3));
  }
}

TEST_CASE("dilation scales degrees, is a BCH automorphism, scales pnorm") {
  CHECK(heis(1, 1, 1).dilate(2) == heis(2, 2, 4));
  auto basis = HallBasis::make(2, 3);
  Prng rng(31);
  for (unsigned t = 0; t < 10; ++t) {
    LieElement x = rand_el(rng, basis), y = rand_el(rng, basis);
    CHECK(x.dilate(1) == x);
    Rat l = rat(static_cast<long>(rng.int_in(1, 5)),
                static_cast<long>(rng.int_in(1, 3)));
    CHECK(x.dilate(2).dilate(3) == x.dilate(6));
    CHECK(bch(x, y).dilate(l) == bch(x.dilate(l), y.dilate(l)));
    // pnorm(dilate(l, x)) = l * pnorm(x), compared exactly
    QuasiNorm lhs = x.dilate(l).pnorm();
    QuasiNorm rhs = x.pnorm().scaled(l);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(heis(1, 0, 0).dilate(0), usage_error);
  CHECK_THROWS_AS(heis(1, 0, 0).dilate(-2), usage_error);
}

TEST_CASE("pnorm worked values and exact comparisons") {
  CHECK(heis(3, 0, 0).pnorm().eq_rat(3));
  CHECK(heis(0, 0, 9).pnorm().eq_rat(3));
  CHECK(heis(0, 0, 0).pnorm().eq_rat(0));
  CHECK(heis(0, 0, 9).pnorm_leq(3));
  CHECK_FALSE(heis(0, 0, 9).pnorm_leq(rat(29, 10)));
  // (0,0,8) has pnorm 8^(1/2), strictly between 2 and 3
  QuasiNorm q = heis(0, 0, 8).pnorm();
  CHECK_FALSE(q.leq_rat(2));
  CHECK(q.leq_rat(3));
}

TEST_CASE("heisenberg exp and log are exact inverses") {
  Mat3 m = heis_algebra_mat(1, 1, 0);
  Mat3 g = heisenberg_exp(m);
  CHECK(g[0][2] == rat(1, 2));
  CHECK(mat3_eq(heisenberg_exp(mat3_zero()), mat3_identity()));
  Prng rng(41);
  for (unsigned t = 0; t < 100; ++t) {
    Mat3 x = heis_algebra_mat(rng.rat_in(6, 5), rng.rat_in(6, 5),
                              rng.rat_in(6, 5));
    CHECK(mat3_eq(heisenberg_log(heisenberg_exp(x)), x));
  }
  Mat3 bad = mat3_identity();
  bad[1][0] = 1;
  CHECK_THROWS_AS(heisenberg_exp(bad), usage_error);
  CHECK_THROWS_AS(heisenberg_log(heis_algebra_mat(1, 1, 1)), usage_error);
}

TEST_CASE("matrix model and abstract (2,2) basis agree on random products") {
  Prng rng(43);
  for (unsigned t = 0; t < 30; ++t) {
    LieElement x = heis(rng.rat_in(4, 3), rng.rat_in(4, 3), rng.rat_in(4, 3));
    LieElement y = heis(rng.rat_in(4, 3), rng.rat_in(4, 3), rng.rat_in(4, 3));
    Mat3 prod = mat3_mul(heisenberg_exp(heis_to_algebra_mat(x)),
                         heisenberg_exp(heis_to_algebra_mat(y)));
    CHECK(heis_from_algebra_mat(heisenberg_log(prod)) == bch(x, y));
  }
}

TEST_CASE("abelian algebras multiply additively") {
  auto basis = HallBasis::make(3, 1);
  Prng rng(59);
  for (unsigned t = 0; t < 10; ++t) {
    LieElement x = rand_el(rng, basis), y = rand_el(rng, basis);
    CHECK(bch(x, y) == x + y);
    CHECK(bracket(x, y).is_zero());
  }
  CHECK(zassenhaus_terms(1).empty());
}

TEST_CASE("basis mismatch is a usage error") {
  auto a = HallBasis::make(2, 2);
  auto b = HallBasis::make(2, 3);
  LieElement x = LieElement::generator(a, 0);
  LieElement y = LieElement::generator(b, 0);
  CHECK_THROWS_AS(bracket(x, y), usage_error);
  CHECK_THROWS_AS(bch(x, y), usage_error);
}
