#include "nilgrowth/concrete_group.hpp"

#include <algorithm>
#include <set>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

namespace {

long long mod_pos(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

size_t ConcreteGroup::coords() const {
  return kind_ == Kind::FiniteAbelian ? moduli_.size() : 3;
}

ConcreteGroup ConcreteGroup::finite_abelian(std::vector<long long> moduli) {
  std::vector<El> gens;
  for (size_t i = 0; i < moduli.size(); ++i) {
    El e(moduli.size(), 0);
    e[i] = 1;
    gens.push_back(e);
  }
  ConcreteGroup g = finite_abelian(std::move(moduli), std::move(gens));
  g.standard_gens_ = true;
  return g;
}

ConcreteGroup ConcreteGroup::finite_abelian(std::vector<long long> moduli,
                                            std::vector<El> generators) {
  for (long long n : moduli)
    if (n < 0) throw usage_error("abelian moduli must be >= 0");
  ConcreteGroup g;
  g.kind_ = Kind::FiniteAbelian;
  g.moduli_ = std::move(moduli);
  g.standard_gens_ = false;
  g.finish_generators(std::move(generators));
  return g;
}

ConcreteGroup ConcreteGroup::heisenberg_z() {
  return heisenberg_z({{1, 0, 0}, {0, 1, 0}});
}

ConcreteGroup ConcreteGroup::heisenberg_z(std::vector<El> generators) {
  ConcreteGroup g;
  g.kind_ = Kind::HeisenbergZ;
  g.standard_gens_ = generators.size() == 2 && generators[0] == El{1, 0, 0} &&
                     generators[1] == El{0, 1, 0};
  g.finish_generators(std::move(generators));
  return g;
}

ConcreteGroup ConcreteGroup::heisenberg_mod(long long m) {
  if (m < 2) throw usage_error("heisenberg-mod modulus must be >= 2");
  ConcreteGroup g;
  g.kind_ = Kind::HeisenbergMod;
  g.heis_mod_ = m;
  g.finish_generators({{1, 0, 0}, {0, 1, 0}});
  return g;
}

void ConcreteGroup::finish_generators(std::vector<El> gens) {
  std::set<El> sbar;
  sbar.insert(identity());
  for (El& g : gens) {
    El c = canon(std::move(g));
    if (c.size() != coords())
      throw usage_error("generator has the wrong coordinate count");
    sbar.insert(inv(c));
    sbar.insert(std::move(c));
  }
  sbar_.assign(sbar.begin(), sbar.end());
}

ConcreteGroup::El ConcreteGroup::identity() const {
  return El(coords(), 0);
}

ConcreteGroup::El ConcreteGroup::canon(El v) const {
  switch (kind_) {
    case Kind::FiniteAbelian:
      for (size_t i = 0; i < moduli_.size(); ++i)
        if (moduli_[i] > 0) v[i] = mod_pos(v[i], moduli_[i]);
      return v;
    case Kind::HeisenbergZ:
      return v;
    case Kind::HeisenbergMod:
      for (auto& x : v) x = mod_pos(x, heis_mod_);
      return v;
  }
  return v;
}

ConcreteGroup::El ConcreteGroup::mul(const El& x, const El& y) const {
  if (kind_ == Kind::FiniteAbelian) {
    El r(moduli_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = x[i] + y[i];
    return canon(std::move(r));
  }
  El r{x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
  return canon(std::move(r));
}

ConcreteGroup::El ConcreteGroup::inv(const El& x) const {
  if (kind_ == Kind::FiniteAbelian) {
    El r(moduli_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -x[i];
    return canon(std::move(r));
  }
  El r{-x[0], -x[1], x[0] * x[1] - x[2]};
  return canon(std::move(r));
}

long long ConcreteGroup::abelian_word_length(const El& v) const {
  if (kind_ != Kind::FiniteAbelian || !standard_gens_)
    throw usage_error(
        "closed-form word length needs a finite abelian group with standard "
        "generators");
  long long total = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    long long n = moduli_[i];
    if (n == 0) {
      total += std::llabs(v[i]);
    } else {
      long long r = mod_pos(v[i], n);
      total += std::min(r, n - r);
    }
  }
  return total;
}

Int ConcreteGroup::ball_size(unsigned r, const Budget& budget) const {
  if (kind_ == Kind::HeisenbergZ) {
    std::vector<HeisEl> gens;
    for (const El& g : sbar_) {
      if (g == identity()) continue;
      gens.push_back(
          HeisEl{Int(static_cast<long>(g[0])), Int(static_cast<long>(g[1])),
                 Int(static_cast<long>(g[2]))});
    }
    HeisBallDP dp(std::move(gens));
    dp.grow_to(r, budget.elements);
    return dp.ball_size();
  }
  return Int(static_cast<unsigned long>(ball_elements(r, budget).size()));
}

std::vector<ConcreteGroup::El> ConcreteGroup::ball_elements(
    unsigned r, const Budget& budget) const {
  std::set<El> seen;
  seen.insert(identity());
  std::vector<El> frontier{identity()};
  for (unsigned step = 0; step < r; ++step) {
    std::vector<El> next;
    for (const El& v : frontier)
      for (const El& g : sbar_) {
        El w = mul(v, g);
        if (seen.insert(w).second) {
          if (seen.size() > budget.elements)
            throw resource_error("ball enumeration element budget exceeded");
          next.push_back(std::move(w));
        }
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<ConcreteGroup::El> ConcreteGroup::all_elements(
    const Budget& budget) const {
  bool finite = kind_ == Kind::HeisenbergMod;
  if (kind_ == Kind::FiniteAbelian) {
    finite = true;
    for (long long n : moduli_)
      if (n == 0) finite = false;
  }
  if (!finite) throw usage_error("element enumeration needs a finite group");
  // Closure of the ball under growth: saturate the BFS.
  std::vector<El> prev, cur = ball_elements(1, budget);
  unsigned r = 1;
  while (cur.size() != prev.size()) {
    prev = std::move(cur);
    r *= 2;
    cur = ball_elements(r, budget);
  }
  return cur;
}

GrowthProfile growth_profile(const ConcreteGroup& g, unsigned r_max,
                             const Budget& budget) {
  GrowthProfile p;
  if (g.kind() == ConcreteGroup::Kind::HeisenbergZ) {
    std::vector<HeisEl> gens;
    for (const auto& e : g.sbar()) {
      if (e == g.identity()) continue;
      gens.push_back(
          HeisEl{Int(static_cast<long>(e[0])), Int(static_cast<long>(e[1])),
                 Int(static_cast<long>(e[2]))});
    }
    HeisBallDP dp(std::move(gens));
    for (unsigned r = 0; r <= r_max; ++r) {
      dp.grow_to(r, budget.elements);
      p.sizes.push_back(dp.ball_size());
    }
  } else {
    // One growing BFS, recording the size at each radius.
    std::set<ConcreteGroup::El> seen;
    seen.insert(g.identity());
    std::vector<ConcreteGroup::El> frontier{g.identity()};
    p.sizes.push_back(Int(1));
    for (unsigned r = 1; r <= r_max; ++r) {
      std::vector<ConcreteGroup::El> next;
      for (const auto& v : frontier)
        for (const auto& s : g.sbar()) {
          auto w = g.mul(v, s);
          if (seen.insert(w).second) {
            if (seen.size() > budget.elements)
              throw resource_error("growth profile element budget exceeded");
            next.push_back(std::move(w));
          }
        }
      frontier = std::move(next);
      p.sizes.push_back(Int(static_cast<unsigned long>(seen.size())));
    }
  }
  for (unsigned r = 1; 3 * r <= r_max; ++r) {
    Rat k = rat(p.sizes[3 * r], p.sizes[r]);
    p.k_ratios.emplace_back(r, k);
    if (!p.min_k || k < *p.min_k) p.min_k = k;
  }
  return p;
}

}  // namespace nilgrowth
