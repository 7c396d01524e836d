#include "nilgrowth/rational.hpp"

#include <sstream>

namespace nilgrowth {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat acc(1);
  Rat b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int int_isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rat rat_sqrt_exact(const Rat& q) {
  if (q < 0) throw std::invalid_argument("sqrt of negative rational");
  Int num = q.get_num(), den = q.get_den();
  Int rn = int_isqrt(num), rd = int_isqrt(den);
  if (rn * rn != num || rd * rd != den)
    throw std::invalid_argument("rational is not a perfect square: " +
                                rat_to_string(q));
  return rat(rn, rd);
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace nilgrowth
