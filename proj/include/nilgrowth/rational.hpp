#ifndef NILGROWTH_RATIONAL_HPP
#define NILGROWTH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilgrowth {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

Rat rat_pow(const Rat& base, unsigned exp);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Largest integer n with n <= q.
Int rat_floor(const Rat& q);
/// Smallest integer n with n >= q.
Int rat_ceil(const Rat& q);

Int int_lcm(const Int& a, const Int& b);
Int int_gcd(const Int& a, const Int& b);

/// Exact square root of a perfect-square rational; throws if not a square.
Rat rat_sqrt_exact(const Rat& q);

/// floor(sqrt(n)) for n >= 0.
Int int_isqrt(const Int& n);

using RatVec = std::vector<Rat>;

std::string vec_to_string(const RatVec& v);

}  // namespace nilgrowth

#endif
