#include "doctest.h"

#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "nilgrowth/concrete_group.hpp"
#include "nilgrowth/errors.hpp"
#include "nilgrowth/prng.hpp"
#include "nilgrowth/scales.hpp"
#include "nilgrowth/box_growth.hpp"

using namespace nilgrowth;

namespace {

HeisEl he(long a, long b, long c) {
  return HeisEl{Int(a), Int(b), Int(c)};
}

}  // namespace

TEST_CASE("ball worked examples") {
  Budget bud;
  auto z2 = ConcreteGroup::finite_abelian({0, 0});
  CHECK(z2.ball_size(2, bud) == 13);
  CHECK(z2.ball_size(0, bud) == 1);
  auto hz = ConcreteGroup::heisenberg_z();
  CHECK(hz.ball_size(1, bud) == 5);
}

TEST_CASE("balls are symmetric and grow submultiplicatively") {
  Budget bud;
  auto z2 = ConcreteGroup::finite_abelian({0, 0});
  auto ball = z2.ball_elements(3, bud);
  std::set<ConcreteGroup::El> set(ball.begin(), ball.end());
  for (const auto& v : ball) CHECK(set.count(z2.inv(v)) == 1);
  GrowthProfile p = growth_profile(z2, 5, bud);
  for (size_t r = 0; r + 1 < p.sizes.size(); ++r) {
    CHECK(p.sizes[r] <= p.sizes[r + 1]);
    CHECK(p.sizes[r + 1] <= Int(static_cast<long>(z2.sbar().size())) * p.sizes[r]);
  }
}

TEST_CASE("growth profiles: plane, saturating cycle, Heisenberg exponent") {
  Budget bud;
  auto z2 = ConcreteGroup::finite_abelian({0, 0});
  GrowthProfile p = growth_profile(z2, 4, bud);
  CHECK(p.sizes == std::vector<Int>{Int(1), Int(5), Int(13), Int(25), Int(41)});
  CHECK(p.k_ratios[0].second == 5);

  auto z5 = ConcreteGroup::finite_abelian({5});
  GrowthProfile p5 = growth_profile(z5, 4, bud);
  CHECK(p5.sizes == std::vector<Int>{Int(1), Int(3), Int(5), Int(5), Int(5)});

  auto hz = ConcreteGroup::heisenberg_z();
  GrowthProfile ph = growth_profile(hz, 64, bud);
  // log2 Gr(2^j) differences approach the homogeneous dimension 4
  double d5 = std::log2(ph.sizes[32].get_d()) - std::log2(ph.sizes[16].get_d());
  double d6 = std::log2(ph.sizes[64].get_d()) - std::log2(ph.sizes[32].get_d());
  CHECK(d5 == doctest::Approx(4).epsilon(0.05));
  CHECK(d6 == doctest::Approx(4).epsilon(0.05));
}

TEST_CASE("Heisenberg DP matches brute-force BFS") {
  Budget bud;
  auto hz = ConcreteGroup::heisenberg_z();
  // independent hash-set BFS over matrix triples
  std::set<std::tuple<long long, long long, long long>> seen{{0, 0, 0}};
  std::vector<std::tuple<long long, long long, long long>> frontier{{0, 0, 0}};
  std::vector<Int> sizes{Int(1)};
  for (unsigned r = 1; r <= 10; ++r) {
    std::vector<std::tuple<long long, long long, long long>> next;
    for (auto [a, b, c] : frontier) {
      const long long moves[4][3] = {
          {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
      for (auto& m : moves) {
        std::tuple<long long, long long, long long> w{
            a + m[0], b + m[1], c + m[2] + a * m[1]};
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
    sizes.push_back(Int(static_cast<unsigned long>(seen.size())));
  }
  GrowthProfile p = growth_profile(hz, 10, bud);
  CHECK(p.sizes == sizes);
}

TEST_CASE("closed-form abelian word length matches BFS distance") {
  Budget bud;
  auto g = ConcreteGroup::finite_abelian({8, 5});
  // BFS distances over the full finite group
  std::map<ConcreteGroup::El, long long> dist;
  dist[g.identity()] = 0;
  std::vector<ConcreteGroup::El> frontier{g.identity()};
  long long r = 0;
  while (!frontier.empty()) {
    ++r;
    std::vector<ConcreteGroup::El> next;
    for (const auto& v : frontier)
      for (const auto& s : g.sbar()) {
        auto w = g.mul(v, s);
        if (!dist.count(w)) {
          dist[w] = r;
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  for (const auto& [v, d] : dist) CHECK(g.abelian_word_length(v) == d);
  CHECK_THROWS_AS(
      ConcreteGroup::heisenberg_z().abelian_word_length({1, 0, 0}),
      usage_error);
}

TEST_CASE("ball DP distances: generators at 1, the commutator at 4") {
  std::vector<HeisEl> gens{he(1, 0, 0), he(0, 1, 0)};
  HeisBallDP dp(gens);
  CHECK(dp.distance(he(1, 0, 0), 8) == 1);
  HeisBallDP dp2(gens);
  CHECK(dp2.distance(he(0, 0, 1), 8) == 4);  // x y x^-1 y^-1
  HeisBallDP dp3(gens);
  CHECK_FALSE(dp3.distance(he(50, 0, 0), 8).has_value());
  // exact distances need a fresh DP
  CHECK_THROWS_AS(static_cast<void>(dp.distance(he(1, 0, 0), 8)), usage_error);
}

TEST_CASE("Heisenberg subgroup canonical forms") {
  auto full = HeisenbergSubgroup::generate({he(1, 0, 0), he(0, 1, 0)});
  CHECK(full.center_modulus() == 1);
  CHECK(full.image() == IntegerLattice::standard(2));
  CHECK(full.member(he(3, -2, 7)));

  auto cyclic = HeisenbergSubgroup::generate({he(2, 0, 0)});
  CHECK(cyclic.center_modulus() == 0);
  CHECK(cyclic.member(he(4, 0, 0)));
  CHECK_FALSE(cyclic.member(he(2, 0, 1)));
  CHECK_FALSE(cyclic.member(he(1, 0, 0)));

  auto sub = HeisenbergSubgroup::generate({he(2, 0, 0), he(0, 2, 0)});
  CHECK(sub.center_modulus() == 4);  // [x^2, y^2] = z^4
  CHECK(sub.member(he(0, 0, 4)));
  CHECK_FALSE(sub.member(he(0, 0, 2)));
  CHECK_FALSE(sub.member(he(1, 1, 0)));

  // generating-set independence of the canonical form
  auto same = HeisenbergSubgroup::generate(
      {he(2, 0, 0), he(2, 2, 2), he(0, 0, 4)});
  auto also = HeisenbergSubgroup::generate({he(0, 2, 0), he(2, 0, 0)});
  CHECK(also == sub);
  CHECK(same.canonical_string() == same.join(same).canonical_string());
}

TEST_CASE("subgroup membership agrees with a BFS closure oracle") {
  Prng rng(2024);
  Budget bud;
  for (unsigned t = 0; t < 50; ++t) {
    std::vector<HeisEl> gens;
    unsigned count = 1 + static_cast<unsigned>(rng.below(3));
    for (unsigned i = 0; i < count; ++i)
      gens.push_back(he(static_cast<long>(rng.int_in(-2, 2)),
                        static_cast<long>(rng.int_in(-2, 2)),
                        static_cast<long>(rng.int_in(-2, 2))));
    HeisenbergSubgroup h = HeisenbergSubgroup::generate(gens);

    // BFS closure to depth 12 over the subgroup generators: everything the
    // oracle reaches must be a member (soundness of the canonical form).
    std::set<std::tuple<long, long, long>> seen{{0, 0, 0}};
    std::vector<HeisEl> frontier{he(0, 0, 0)};
    std::vector<HeisEl> sym;
    for (const auto& g : gens) {
      sym.push_back(g);
      sym.push_back(heis_inv(g));
    }
    for (unsigned depth = 0; depth < 12 && seen.size() < 4000; ++depth) {
      std::vector<HeisEl> next;
      for (const auto& v : frontier)
        for (const auto& g : sym) {
          HeisEl w = heis_mul(v, g);
          auto key = std::make_tuple(static_cast<long>(w.a.get_si()),
                                     static_cast<long>(w.b.get_si()),
                                     static_cast<long>(w.c.get_si()));
          if (seen.insert(key).second) next.push_back(w);
        }
      frontier = std::move(next);
    }
    for (auto [a, b, c] : seen) CHECK(h.member(he(a, b, c)));

    // canonical generators evaluate back into the subgroup's BFS closure
    // for small instances, and joins are idempotent
    CHECK(h.join(h) == h);
    for (const auto& g : h.canonical_generators()) CHECK(h.member(g));
  }
  (void)bud;
}

TEST_CASE("box growth profile: counts verified against brute force at N=2") {
  Budget bud;
  const long long N = 2, N3 = 8;
  using T = std::tuple<long long, long long, long long>;
  std::set<T> s;
  for (long long a = -N; a <= N; ++a)
    for (long long b = -N; b <= N; ++b)
      for (long long c = -N3; c <= N3; ++c) s.insert({a, b, c});
  std::set<T> cur = s;
  std::vector<Int> brute{Int(static_cast<unsigned long>(cur.size()))};
  for (int n = 2; n <= 3; ++n) {
    std::set<T> next;
    for (const auto& [a, b, c] : cur)
      for (const auto& [x, y, z] : s) next.insert({a + x, b + y, c + z + a * y});
    cur = std::move(next);
    brute.push_back(Int(static_cast<unsigned long>(cur.size())));
  }
  BoxGrowthProfile p = box_growth_profile(2, 3, 7, bud);
  CHECK(p.sizes == brute);
  CHECK(p.sizes[0] == 425);
}

TEST_CASE("box generating-set relations hold with word length at most five") {
  for (unsigned big_n : {2u, 3u, 4u}) {
    unsigned max_len = 0;
    CHECK(verify_box_relations(big_n, 50, 7, &max_len));
    CHECK(max_len <= 5);
  }
}

TEST_CASE("box growth profile guards its parameter budget") {
  Budget bud;
  CHECK_THROWS_AS(static_cast<void>(box_growth_profile(5, 10, 7, bud)),
                  usage_error);
  CHECK_THROWS_AS(static_cast<void>(box_growth_profile(2, 30, 7, bud)),
                  resource_error);
}

TEST_CASE("subgroup scales: worked instances") {
  Budget bud;
  auto z2 = ConcreteGroup::finite_abelian({0, 0});
  ScaleReport a = subgroup_scales_abelian(z2, {{1, 0}, {0, 5}}, 5, bud);
  CHECK(a.change_scales == std::vector<unsigned>{2});

  ScaleReport b = subgroup_scales_abelian(z2, {{1, 0}, {0, 1}}, 5, bud);
  CHECK(b.change_count == 0);

  ScaleReport h =
      subgroup_scales_heisenberg({he(2, 0, 0), he(0, 2, 0)}, 7, bud);
  CHECK(h.change_count <= 4);
  CHECK(h.change_scales == std::vector<unsigned>{0});

  auto z3 = ConcreteGroup::finite_abelian({0, 0, 0});
  ScaleReport p = subgroup_scales_abelian(
      z3, {{5, 0, 0}, {0, 33, 0}, {0, 0, 513}}, 10, bud);
  CHECK(p.change_scales == std::vector<unsigned>{2, 5, 9});
}

TEST_CASE("abelian relation scales") {
  Budget bud;
  ScaleReport r5 = abelian_relation_scales({5}, 8, bud);
  CHECK(r5.change_scales == std::vector<unsigned>{2});
  ScaleReport r = abelian_relation_scales({8, 64}, 10, bud);
  CHECK(r.change_scales == std::vector<unsigned>{2, 5});
  ScaleReport free = abelian_relation_scales({0, 0}, 8, bud);
  CHECK(free.change_count == 0);
  ScaleReport big = abelian_relation_scales({8, 64, 1024}, 12, bud);
  CHECK(big.change_scales == std::vector<unsigned>{2, 5, 9});
  // the cyclic scan law on a sample
  for (long long n : {5, 9, 16, 100, 257, 1000}) {
    unsigned expected = 0;
    while ((1LL << (expected + 1)) < n) ++expected;
    ScaleReport rep = abelian_relation_scales({n}, expected + 2, bud);
    CHECK(rep.change_scales == std::vector<unsigned>{expected});
  }
}

TEST_CASE("injectivity radius checks") {
  InjectivityCheck a = injectivity_radius_check(5, 2);
  CHECK(a.radius == 1);
  CHECK(a.isomorphic);
  InjectivityCheck b = injectivity_radius_check(100, 5);
  CHECK(b.radius == 15);
  CHECK(b.isomorphic);
  InjectivityCheck c = injectivity_radius_check(5, 4);
  CHECK_FALSE(c.isomorphic);
}

TEST_CASE("finite-index generating sets from bounded balls") {
  Budget bud;
  auto z6 = ConcreteGroup::finite_abelian({6});
  GeneratingCheck a = finite_index_generating_check(z6, {{2}}, bud);
  CHECK(a.index == 2);
  CHECK(a.ball_radius == 3);
  CHECK(a.generates);
  GeneratingCheck b = finite_index_generating_check(z6, {{1}}, bud);
  CHECK(b.index == 1);
  CHECK(b.generates);
  auto h3 = ConcreteGroup::heisenberg_mod(3);
  GeneratingCheck c = finite_index_generating_check(h3, {{0, 0, 1}}, bud);
  CHECK(c.group_order == 27);
  CHECK(c.index == 9);
  CHECK(c.ball_radius == 17);
  CHECK(c.generates);
}

TEST_CASE("chain counting bound and its finite-index form") {
  auto mk = [](std::vector<std::vector<long>> rows) {
    std::vector<RatVec> rr;
    for (auto& r : rows) {
      RatVec v;
      for (long x : r) v.push_back(Rat(x));
      rr.push_back(std::move(v));
    }
    return IntegerLattice::span(2, rr);
  };
  std::vector<IntegerLattice> chain = {mk({{8, 0}, {0, 8}}),
                                       mk({{4, 0}, {0, 8}}),
                                       mk({{4, 0}, {0, 4}}),
                                       mk({{2, 0}, {0, 4}})};
  std::vector<IntegerLattice> sub;
  for (const auto& l : chain) sub.push_back(l.scaled(2));
  ChainCheck c = chain_count_check(chain, sub);
  CHECK(c.ok);
  CHECK(c.max_index == 4);
  CHECK(c.bound == 12);

  ChainCheck same = chain_count_check(chain, chain);
  CHECK(same.ok);
  CHECK(same.bound == same.distinct_sub);

  // doubling indices make the bound tight
  std::vector<IntegerLattice> dbl, dsub;
  for (int i = 0; i < 4; ++i) {
    dbl.push_back(IntegerLattice::span(1, {RatVec{rat_pow(Rat(2), 3 - i)}}));
    dsub.push_back(IntegerLattice::span(1, {RatVec{Rat(8)}}));
  }
  ChainCheck tight = chain_count_check(dbl, dsub);
  CHECK(tight.ok);
  CHECK(tight.bound == tight.distinct_main);

  ChainCheck restricted = chain_count_restricted(chain, mk({{2, 0}, {0, 2}}));
  CHECK(restricted.ok);

  // infinite index is a usage error
  std::vector<IntegerLattice> lines = {mk({{1, 0}})};
  std::vector<IntegerLattice> planes = {mk({{1, 0}, {0, 1}})};
  CHECK_THROWS_AS(static_cast<void>(chain_count_check(planes, lines)),
                  usage_error);
}
