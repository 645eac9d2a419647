#include "spanoid/rng.hpp"

#include <limits>

namespace spanoid {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 applied to the (seed, stream) pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  Integer num = boost::multiprecision::numerator(p);
  Integer den = boost::multiprecision::denominator(p);
  if (den <= Integer(std::numeric_limits<std::uint64_t>::max()))
    return Integer(below(den.convert_to<std::uint64_t>())) < num;
  return unit() < to_double(p);
}

}  // namespace spanoid
