#include "nilgrowth/heis_group.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nilgrowth/errors.hpp"

namespace nilgrowth {

bool HeisEl::operator<(const HeisEl& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::string HeisEl::str() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

HeisEl heis_mul(const HeisEl& x, const HeisEl& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
}

HeisEl heis_inv(const HeisEl& x) {
  return {-x.a, -x.b, x.a * x.b - x.c};
}

HeisEl heis_pow(const HeisEl& x, const Int& n) {
  // (a,b,c)^n = (na, nb, nc + n(n-1)/2 * ab), valid for all integers n.
  Int half = n * (n - 1) / 2;
  return {n * x.a, n * x.b, n * x.c + half * x.a * x.b};
}

HeisEl heis_commutator(const HeisEl& x, const HeisEl& y) {
  return heis_mul(heis_mul(x, y), heis_mul(heis_inv(x), heis_inv(y)));
}

void IntervalSet::insert(long long lo, long long hi) {
  if (lo > hi) return;
  // Merge into the sorted disjoint list.
  std::vector<std::pair<long long, long long>> out;
  out.reserve(ivs_.size() + 1);
  bool placed = false;
  for (const auto& [a, b] : ivs_) {
    if (b + 1 < lo) {
      out.emplace_back(a, b);
    } else if (hi + 1 < a) {
      if (!placed) {
        out.emplace_back(lo, hi);
        placed = true;
      }
      out.emplace_back(a, b);
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
  if (!placed) out.emplace_back(lo, hi);
  ivs_ = std::move(out);
}

void IntervalSet::merge_from(const IntervalSet& o, long long shift) {
  for (const auto& [a, b] : o.ivs_) insert(a + shift, b + shift);
}

bool IntervalSet::contains(long long v) const {
  auto it = std::upper_bound(
      ivs_.begin(), ivs_.end(), v,
      [](long long x, const std::pair<long long, long long>& iv) {
        return x < iv.first;
      });
  if (it == ivs_.begin()) return false;
  --it;
  return v <= it->second;
}

std::uint64_t IntervalSet::count() const {
  std::uint64_t n = 0;
  for (const auto& [a, b] : ivs_)
    n += static_cast<std::uint64_t>(b - a + 1);
  return n;
}

HeisBallDP::HeisBallDP(std::vector<HeisEl> generators) {
  for (const HeisEl& g : generators) {
    if (g == HeisEl{}) continue;
    if (!g.a.fits_slong_p() || !g.b.fits_slong_p() || !g.c.fits_slong_p())
      throw usage_error("ball DP generators must fit machine words");
    gens_.push_back(g);
    HeisEl inv = heis_inv(g);
    gens_.push_back(inv);
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (const HeisEl& g : gens_) {
    max_gen_ab_ = std::max(max_gen_ab_, std::llabs(g.a.get_si()));
    max_gen_ab_ = std::max(max_gen_ab_, std::llabs(g.b.get_si()));
  }
  ensure_span(std::max<long long>(1, max_gen_ab_));
  grid_[index(0, 0)].insert(0, 0);
}

size_t HeisBallDP::index(long long a, long long b) const {
  return static_cast<size_t>((a + span_) * (2 * span_ + 1) + (b + span_));
}

void HeisBallDP::ensure_span(long long span) {
  if (span <= span_ && !grid_.empty()) return;
  std::vector<IntervalSet> bigger(
      static_cast<size_t>((2 * span + 1) * (2 * span + 1)));
  if (!grid_.empty()) {
    for (long long a = -span_; a <= span_; ++a)
      for (long long b = -span_; b <= span_; ++b) {
        IntervalSet& src = grid_[index(a, b)];
        if (src.intervals().empty()) continue;
        bigger[static_cast<size_t>((a + span) * (2 * span + 1) + (b + span))] =
            std::move(src);
      }
  }
  grid_ = std::move(bigger);
  span_ = span;
}

void HeisBallDP::grow_to(unsigned radius, std::uint64_t element_budget) {
  if (radius <= radius_) return;
  ensure_span(static_cast<long long>(radius) * std::max<long long>(1, max_gen_ab_));
  while (radius_ < radius) {
    std::vector<IntervalSet> next = grid_;
    const long long reach = static_cast<long long>(radius_) * max_gen_ab_;
    std::uint64_t total = 0;
    for (long long a = -reach; a <= reach; ++a) {
      for (long long b = -reach; b <= reach; ++b) {
        const IntervalSet& set = grid_[index(a, b)];
        if (set.intervals().empty()) continue;
        for (const HeisEl& g : gens_) {
          long long ga = g.a.get_si(), gb = g.b.get_si(), gc = g.c.get_si();
          // (a,b,c) * g = (a+ga, b+gb, c + gc + a*gb)
          next[index(a + ga, b + gb)].merge_from(set, gc + a * gb);
        }
      }
    }
    grid_ = std::move(next);
    ++radius_;
    for (const IntervalSet& set : grid_) total += set.count();
    if (total > element_budget)
      throw resource_error("ball DP element budget exceeded at radius " +
                           std::to_string(radius_));
  }
}

Int HeisBallDP::ball_size() const {
  std::uint64_t total = 0;
  for (const IntervalSet& set : grid_) total += set.count();
  return Int(static_cast<unsigned long>(total));
}

bool HeisBallDP::ball_contains(const HeisEl& v) const {
  if (!v.a.fits_slong_p() || !v.b.fits_slong_p() || !v.c.fits_slong_p())
    return false;
  long long a = v.a.get_si(), b = v.b.get_si();
  if (std::llabs(a) > span_ || std::llabs(b) > span_) return false;
  return grid_[index(a, b)].contains(v.c.get_si());
}

void HeisBallDP::for_each_cell(
    const std::function<void(long long, long long, const IntervalSet&)>& fn)
    const {
  for (long long a = -span_; a <= span_; ++a)
    for (long long b = -span_; b <= span_; ++b) {
      const IntervalSet& set = grid_[index(a, b)];
      if (!set.intervals().empty()) fn(a, b, set);
    }
}

std::optional<unsigned> HeisBallDP::distance(const HeisEl& v,
                                             unsigned max_radius) {
  if (ball_contains(v)) {
    if (radius_ == 0) return 0;
    // The first hit radius was already passed; exact distances need a
    // fresh DP.
    throw usage_error("distance query on an already-grown ball DP");
  }
  while (radius_ < max_radius) {
    grow_to(radius_ + 1);
    if (ball_contains(v)) return radius_;
  }
  return std::nullopt;
}

HeisenbergSubgroup HeisenbergSubgroup::trivial() {
  return HeisenbergSubgroup();
}

namespace {

/// Row HNF with a tracked transform: returns (H, U) with H = U * A, zero
/// rows of H last; their U rows span the integer kernel of A.
std::pair<IntMat, IntMat> hermite_with_transform(IntMat a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  IntMat u(rows, std::vector<Int>(rows, Int(0)));
  for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        if (best == rows || rat_abs(Rat(a[i][c])) < rat_abs(Rat(a[best][c])))
          best = i;
      }
      if (best == rows) break;
      std::swap(a[r], a[best]);
      std::swap(u[r], u[best]);
      bool done = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& q : a[r]) q = -q;
      for (auto& q : u[r]) q = -q;
    }
    for (size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q == 0) continue;
      for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
      for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
    }
    ++r;
  }
  return {std::move(a), std::move(u)};
}

HeisEl word_in_order(const std::vector<HeisEl>& gens,
                     const std::vector<Int>& exponents) {
  HeisEl w;
  for (size_t i = 0; i < gens.size(); ++i)
    if (exponents[i] != 0) w = heis_mul(w, heis_pow(gens[i], exponents[i]));
  return w;
}

Int mod_reduce(const Int& c, const Int& m) {
  if (m == 0) return c;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

HeisenbergSubgroup HeisenbergSubgroup::generate(
    const std::vector<HeisEl>& raw_gens) {
  std::vector<HeisEl> gens;
  for (const HeisEl& g : raw_gens)
    if (!(g == HeisEl{})) gens.push_back(g);
  HeisenbergSubgroup out;
  if (gens.empty()) return out;

  IntMat abelianized;
  for (const HeisEl& g : gens) abelianized.push_back({g.a, g.b});
  auto [h, u] = hermite_with_transform(abelianized);

  std::vector<RatVec> image_rows;
  size_t rank = 0;
  for (const auto& row : h) {
    if (row[0] == 0 && row[1] == 0) continue;
    image_rows.push_back({Rat(row[0]), Rat(row[1])});
    ++rank;
  }
  out.image_ = IntegerLattice::span(2, image_rows);

  // Central intersection: commutator determinants and kernel-word values.
  Int m(0);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      m = int_gcd(m, gens[i].a * gens[j].b - gens[j].a * gens[i].b);
  for (size_t i = rank; i < h.size(); ++i) {
    HeisEl w = word_in_order(gens, u[i]);
    assert(w.a == 0 && w.b == 0);
    m = int_gcd(m, w.c);
  }
  out.m_ = m;

  // Canonical preimages of the image basis rows.
  for (size_t t = 0; t < out.image_.rank(); ++t) {
    RatVec row = out.image_.basis_row(t);
    // Solve y * H = row over the nonzero rows of H, then x = y * U.
    std::vector<Int> target{row[0].get_num(), row[1].get_num()};
    std::vector<Int> y(rank, Int(0));
    std::vector<Int> w = target;
    for (size_t i = 0; i < rank; ++i) {
      size_t p = h[i][0] != 0 ? 0 : 1;
      assert(w[p] % h[i][p] == 0);
      y[i] = w[p] / h[i][p];
      w[0] -= y[i] * h[i][0];
      w[1] -= y[i] * h[i][1];
    }
    assert(w[0] == 0 && w[1] == 0);
    std::vector<Int> x(gens.size(), Int(0));
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = 0; j < gens.size(); ++j) x[j] += y[i] * u[i][j];
    HeisEl pre = word_in_order(gens, x);
    assert(Rat(pre.a) == row[0] && Rat(pre.b) == row[1]);
    pre.c = mod_reduce(pre.c, out.m_);
    out.preimages_.push_back(pre);
  }
  return out;
}

std::optional<Int> HeisenbergSubgroup::central_offset(const Int& a,
                                                      const Int& b) const {
  auto coords = image_.coordinates(RatVec{Rat(a), Rat(b)});
  if (!coords) return std::nullopt;
  HeisEl w;
  for (size_t i = 0; i < preimages_.size(); ++i)
    if ((*coords)[i] != 0)
      w = heis_mul(w, heis_pow(preimages_[i], (*coords)[i]));
  return mod_reduce(w.c, m_);
}

bool HeisenbergSubgroup::member(const HeisEl& v) const {
  auto offset = central_offset(v.a, v.b);
  if (!offset) return false;
  if (m_ == 0) return v.c == *offset;
  return mod_reduce(v.c - *offset, m_) == 0;
}

std::vector<HeisEl> HeisenbergSubgroup::canonical_generators() const {
  std::vector<HeisEl> gens = preimages_;
  if (m_ > 0) gens.push_back(HeisEl{Int(0), Int(0), m_});
  return gens;
}

HeisenbergSubgroup HeisenbergSubgroup::join(const HeisenbergSubgroup& o) const {
  std::vector<HeisEl> gens = canonical_generators();
  for (const HeisEl& g : o.canonical_generators()) gens.push_back(g);
  return generate(gens);
}

HeisenbergSubgroup HeisenbergSubgroup::join_element(const HeisEl& g) const {
  if (member(g)) return *this;
  std::vector<HeisEl> gens = canonical_generators();
  gens.push_back(g);
  return generate(gens);
}

bool HeisenbergSubgroup::operator==(const HeisenbergSubgroup& o) const {
  if (!(image_ == o.image_) || m_ != o.m_) return false;
  if (preimages_.size() != o.preimages_.size()) return false;
  for (size_t i = 0; i < preimages_.size(); ++i)
    if (!(preimages_[i].c == o.preimages_[i].c)) return false;
  return true;
}

std::string HeisenbergSubgroup::canonical_string() const {
  std::ostringstream os;
  os << image_.canonical_string() << "m=" << m_.get_str() << ";";
  for (const HeisEl& p : preimages_) os << p.c.get_str() << ",";
  return os.str();
}

}  // namespace nilgrowth
