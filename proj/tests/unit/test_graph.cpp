#include <cmath>

#include "doctest.h"
#include "spanoid/graph.hpp"
#include "spanoid/rng.hpp"

using namespace spanoid;

namespace {

std::vector<Subset> reachability(const Digraph& g) {
  const std::size_t n = g.vertices();
  std::vector<Subset> reach(n, Subset(n));
  for (Element v = 0; v < n; ++v) {
    reach[v].set(v);
    std::vector<Element> stack{v};
    while (!stack.empty()) {
      Element u = stack.back();
      stack.pop_back();
      g.successors(u).for_each([&](Element w) {
        if (!reach[v].test(w)) {
          reach[v].set(w);
          stack.push_back(w);
        }
      });
    }
  }
  return reach;
}

// A component is a source when every vertex reaching it lies inside it.
std::vector<std::vector<Element>> naive_sources(const Digraph& g) {
  const std::size_t n = g.vertices();
  auto reach = reachability(g);
  std::vector<std::vector<Element>> out;
  Subset seen(n);
  for (Element v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    std::vector<Element> comp;
    bool source = true;
    for (Element u = 0; u < n; ++u) {
      bool same = reach[v].test(u) && reach[u].test(v);
      if (same) {
        comp.push_back(u);
        seen.set(u);
      } else if (reach[u].test(v)) {
        source = false;
      }
    }
    if (source) out.push_back(comp);
  }
  return out;
}

}  // namespace

TEST_CASE("digraph basics") {
  Digraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  CHECK(g.edges() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(3, 2));
  std::size_t count = 0;
  auto comp = strongly_connected_components(g, count);
  CHECK(count == 3);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[2] != comp[3]);
  CHECK(source_components(g) == std::vector<std::vector<Element>>{{0, 1}, {2}});
}

TEST_CASE("source components match a reachability oracle") {
  Rng rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.below(70);
    Digraph g(n);
    std::size_t edges = rng.below(2 * n + 1);
    for (std::size_t k = 0; k < edges; ++k) {
      Element a = static_cast<Element>(rng.below(n));
      Element b = static_cast<Element>(rng.below(n));
      if (a != b) g.add_edge(a, b);
    }
    CHECK(source_components(g) == naive_sources(g));
  }
}

TEST_CASE("graph process on extreme samplers") {
  auto empty = graph_process_run(EmptySampler(9), 5, 1);
  CHECK(empty == std::vector<std::size_t>(6, 9));
  auto complete = graph_process_run(CompleteSampler(9), 3, 1);
  CHECK(complete == std::vector<std::size_t>{9, 1, 1, 1});
}

TEST_CASE("source counts never increase") {
  FixedSetsSampler mu(30, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto counts = graph_process_run(mu, 60, seed);
    CHECK(counts.front() == 30);
    for (std::size_t t = 1; t < counts.size(); ++t) CHECK(counts[t] <= counts[t - 1]);
  }
  CHECK(graph_process_run(mu, 40, 3) == graph_process_run(mu, 40, 3));
}

TEST_CASE("fixed sets sampler against the directed bound") {
  FixedSetsSampler mu(50, 10);
  CHECK(mu.alpha() == Rational(1, 5));
  const std::size_t t = static_cast<std::size_t>(std::ceil(4 / 0.2 * std::log(50.0)));
  const double bound = directed_lemma_bound(50, mu.alpha(), mu.beta(), t);
  CHECK(bound == doctest::Approx(50 * std::pow(0.95, double(t)) + 10));
  for (std::uint64_t seed = 0; seed < 30; ++seed) CHECK(double(graph_process_run(mu, t, seed).back()) <= bound);
  AuditReport a = audit_sampler(mu, 10000, 4);
  CHECK(a.passed);
  CHECK(a.samples == 10000);
}
