#ifndef MW_SRC_SAMPLING_HPP
#define MW_SRC_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "mw/rational.hpp"

namespace mw::detail {

// Seeded sampler for the randomized refuters.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Integer in [lo, hi] plus a fraction num/den with 0 <= num < den <= max_den.
  Rational perturbed(long lo, long hi, long max_den) {
    const long den = integer(1, max_den);
    return Rational(integer(lo, hi)) + Rational(integer(0, den - 1)) / den;
  }

  QVector point(Index n, long bound, long max_den) {
    QVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = perturbed(-bound, bound, max_den);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mw::detail

#endif  // MW_SRC_SAMPLING_HPP
