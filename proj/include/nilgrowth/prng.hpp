#ifndef NILGROWTH_PRNG_HPP
#define NILGROWTH_PRNG_HPP

#include <cstdint>
#include <string>

#include "nilgrowth/rational.hpp"

namespace nilgrowth {

/// xoshiro256** seeded through splitmix64. The algorithm name is recorded in
/// report headers so randomized suites stay reproducible across builds.
class Prng {
 public:
  static constexpr const char* kAlgorithm = "xoshiro256**-v1";

  explicit Prng(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform in [0, bound) by modulo reduction (determinism over uniformity).
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi] inclusive.
  long long int_in(long long lo, long long hi);

  /// Rational with numerator in [-num_max, num_max] and denominator in [1, den_max].
  Rat rat_in(long num_max, long den_max);

 private:
  std::uint64_t s_[4];
};

}  // namespace nilgrowth

#endif
