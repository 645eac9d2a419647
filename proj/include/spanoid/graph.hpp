#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spanoid/rational.hpp"
#include "spanoid/rng.hpp"
#include "spanoid/subset.hpp"

namespace spanoid {

// Simple directed graph on [n] with bitset adjacency; no self-loops.
class Digraph {
 public:
  explicit Digraph(std::size_t n = 0);

  std::size_t vertices() const { return out_.size(); }
  void add_edge(Element from, Element to);
  bool has_edge(Element from, Element to) const { return out_[from].test(to); }
  const Subset& successors(Element v) const { return out_[v]; }
  Digraph& operator|=(const Digraph& other);
  std::size_t edges() const;

 private:
  std::vector<Subset> out_;
};

// Component id per vertex (Tarjan, iterative) and the number of components.
std::vector<std::uint32_t> strongly_connected_components(const Digraph& g, std::size_t& count);
// Strongly connected components with no edge entering from outside, each
// sorted, listed by smallest vertex.
std::vector<std::vector<Element>> source_components(const Digraph& g);

struct Draw {
  Digraph graph;
  std::vector<Element> chosen;  // what the sampler picked (ℓ, or the set J)
};

class SpreadSampler {
 public:
  virtual ~SpreadSampler() = default;
  virtual std::size_t vertices() const = 0;
  virtual Rational alpha() const = 0;
  virtual Rational beta() const = 0;
  virtual Draw draw(Rng& rng) const = 0;
  Digraph sample(Rng& rng) const { return draw(rng).graph; }
};

class EmptySampler : public SpreadSampler {
 public:
  explicit EmptySampler(std::size_t n) : n_(n) {}
  std::size_t vertices() const override { return n_; }
  Rational alpha() const override { return 0; }
  Rational beta() const override { return 0; }
  Draw draw(Rng&) const override { return {Digraph(n_), {}}; }

 private:
  std::size_t n_;
};

class CompleteSampler : public SpreadSampler {
 public:
  explicit CompleteSampler(std::size_t n) : n_(n) {}
  std::size_t vertices() const override { return n_; }
  Rational alpha() const override { return 1; }
  Rational beta() const override { return Rational(n_); }
  Draw draw(Rng&) const override;

 private:
  std::size_t n_;
};

// Fixed k-sets S_i = {i+1, ..., i+k} (mod n); pick j uniformly and add j -> i
// for every i with j in S_i. Declared (k/n, 1).
class FixedSetsSampler : public SpreadSampler {
 public:
  FixedSetsSampler(std::size_t n, std::size_t k);
  std::size_t vertices() const override { return n_; }
  Rational alpha() const override { return Rational(k_, n_); }
  Rational beta() const override { return 1; }
  Draw draw(Rng& rng) const override;

 private:
  std::size_t n_, k_;
  std::vector<std::vector<Element>> targets_;  // j -> {i : j in S_i}
};

// Source counts of G_0 (empty), G_1, ..., G_tmax where G_t = G_{t-1} ∪ fresh sample.
std::vector<std::size_t> graph_process_run(const SpreadSampler& mu, std::size_t t_max,
                                           std::uint64_t seed);

// n(1 - α/4)^t + 2β/α
double directed_lemma_bound(std::size_t n, const Rational& alpha, const Rational& beta,
                            std::size_t t);

struct AuditReport {
  bool passed = true;
  std::size_t samples = 0;
  double min_incoming = 1;  // smallest per-vertex incoming-edge frequency
  double max_edge = 0;      // largest per-edge frequency
  double incoming_floor = 0;
  double edge_ceiling = 0;
  Element worst_vertex = 0;
  std::pair<Element, Element> worst_edge{0, 0};
};
// Monte Carlo check of the declared (α, β) with slack `sigmas` binomial
// standard deviations at the declared probability.
AuditReport audit_sampler(const SpreadSampler& mu, std::size_t samples, std::uint64_t seed,
                          double sigmas = 3.0);

}  // namespace spanoid
