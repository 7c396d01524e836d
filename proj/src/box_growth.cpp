#include "nilgrowth/box_growth.hpp"

#include <cmath>
#include <map>

#include "nilgrowth/errors.hpp"
#include "nilgrowth/prng.hpp"

namespace nilgrowth {

namespace {

using Cell = std::pair<long long, long long>;

double fit_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

BoxGrowthProfile box_growth_profile(unsigned big_n, unsigned n_max,
                               std::uint64_t seed, const Budget& budget) {
  if (big_n < 1 || big_n > 4)
    throw usage_error("box growth profile supports N in 1..4");
  if (n_max > 24) throw resource_error("box growth profile supports n_max <= 24");

  const long long N = big_n;
  const long long N3 = N * N * N;

  BoxGrowthProfile out;
  out.big_n = big_n;
  out.n_max = n_max;

  // S^1 = S: every (a,b) cell carries the full interval [-N^3, N^3].
  std::map<Cell, IntervalSet> cells;
  for (long long a = -N; a <= N; ++a)
    for (long long b = -N; b <= N; ++b) {
      IntervalSet s;
      s.insert(-N3, N3);
      cells.emplace(Cell{a, b}, std::move(s));
    }

  std::uint64_t touched = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    Int size(0);
    for (const auto& [cell, set] : cells)
      size += Int(static_cast<unsigned long>(set.count()));
    out.sizes.push_back(size);
    if (n == n_max) break;

    // S^{n+1} = S^n * S: (a,b,c)(a',b',c') = (a+a', b+b', c + c' + a b'),
    // and c' sweeps the full interval, so each source interval lands
    // shifted by a*b' and widened by N^3 on both sides.
    std::map<Cell, IntervalSet> next;
    for (const auto& [cell, set] : cells) {
      const auto [a, b] = cell;
      if (++touched > budget.elements)
        throw resource_error("box growth profile cell budget exceeded");
      for (long long ga = -N; ga <= N; ++ga)
        for (long long gb = -N; gb <= N; ++gb) {
          IntervalSet& target = next[Cell{a + ga, b + gb}];
          for (const auto& [lo, hi] : set.intervals())
            target.insert(lo + a * gb - N3, hi + a * gb + N3);
        }
    }
    cells = std::move(next);
  }

  std::vector<std::pair<double, double>> low, high;
  double base = out.sizes[0].get_d();
  for (unsigned n = 1; n <= n_max; ++n) {
    double x = std::log(static_cast<double>(n));
    double y = std::log(out.sizes[n - 1].get_d() / base);
    if (n <= big_n)
      low.emplace_back(x, y);
    else
      high.emplace_back(x, y);
  }
  out.slope_low = fit_slope(low);
  out.slope_high = fit_slope(high);

  out.relations_ok =
      verify_box_relations(big_n, 50, seed, &out.max_relation_length);
  return out;
}

bool verify_box_relations(unsigned big_n, unsigned samples, std::uint64_t seed,
                          unsigned* max_length_out) {
  const long long N = big_n;
  const long long N3 = N * N * N;
  auto abs_leq = [](const Int& v, long long bound) {
    Int b(static_cast<long>(bound));
    return v >= -b && v <= b;
  };
  auto in_s = [&](const HeisEl& m) {
    return abs_leq(m.a, N) && abs_leq(m.b, N) && abs_leq(m.c, N3);
  };
  auto el = [](long long a, long long b, long long c) {
    return HeisEl{Int(static_cast<long>(a)), Int(static_cast<long>(b)),
                  Int(static_cast<long>(c))};
  };
  unsigned max_len = 0;
  bool ok = true;

  HeisEl x = el(1, 0, 0), y = el(0, 1, 0), z = el(0, 0, 1);
  // [x, y] = z: the word x y x^-1 y^-1 z^-1 of length five.
  ok &= heis_commutator(x, y) == z;
  max_len = std::max(max_len, 5u);
  // x z = z x and y z = z y: words of length four.
  ok &= heis_mul(x, z) == heis_mul(z, x);
  ok &= heis_mul(y, z) == heis_mul(z, y);
  max_len = std::max(max_len, 4u);

  Prng rng(seed);
  for (unsigned t = 0; t < samples && ok; ++t) {
    long long a = rng.int_in(-N, N), b = rng.int_in(-N, N),
              c = rng.int_in(-N3, N3);
    HeisEl m = el(a, b, c);
    for (int sign : {1, -1}) {
      // (a +- 1, b, c) = (a, b, c) * x^{+-1}, inside S when entries fit.
      HeisEl mx = el(a + sign, b, c);
      if (in_s(mx)) {
        ok &= heis_mul(m, heis_pow(x, Int(sign))) == mx;
        max_len = std::max(max_len, 3u);
      }
      // (a, b +- 1, c) = y^{+-1} * (a, b, c).
      HeisEl my = el(a, b + sign, c);
      if (in_s(my)) {
        ok &= heis_mul(heis_pow(y, Int(sign)), m) == my;
        max_len = std::max(max_len, 3u);
      }
      // (a, b, c +- 1) = (a, b, c) * z^{+-1}.
      HeisEl mz = el(a, b, c + sign);
      if (in_s(mz)) {
        ok &= heis_mul(m, heis_pow(z, Int(sign))) == mz;
        max_len = std::max(max_len, 3u);
      }
    }
  }
  if (max_length_out) *max_length_out = max_len;
  return ok;
}

}  // namespace nilgrowth
