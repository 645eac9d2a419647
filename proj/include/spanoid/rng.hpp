#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "spanoid/rational.hpp"

namespace spanoid {

// Seed of the stream'th sub-task of a run seeded with `seed`. Streams are
// numbered by a plain counter, so appending a task never moves earlier ones.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

// mt19937_64 with draws defined here rather than by <random> distributions,
// whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(const Rational& p);
  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spanoid
