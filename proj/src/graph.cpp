#include "spanoid/graph.hpp"

#include <algorithm>
#include <cmath>

#include "spanoid/error.hpp"

namespace spanoid {

Digraph::Digraph(std::size_t n) : out_(n, Subset(n)) {}

void Digraph::add_edge(Element from, Element to) {
  if (from >= out_.size() || to >= out_.size()) throw DomainError("edge endpoint outside the vertex range");
  if (from != to) out_[from].set(to);
}

Digraph& Digraph::operator|=(const Digraph& other) {
  if (other.vertices() != vertices()) throw DomainError("graph union needs equal vertex counts");
  for (std::size_t v = 0; v < out_.size(); ++v) out_[v] |= other.out_[v];
  return *this;
}

std::size_t Digraph::edges() const {
  std::size_t e = 0;
  for (const auto& s : out_) e += s.count();
  return e;
}

std::vector<std::uint32_t> strongly_connected_components(const Digraph& g, std::size_t& count) {
  const std::size_t n = g.vertices();
  constexpr std::uint32_t unseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(n, unseen), low(n, 0), comp(n, unseen);
  std::vector<Element> stack;
  std::vector<bool> on_stack(n, false);
  std::uint32_t next_index = 0;
  count = 0;
  struct Frame {
    Element v;
    Element cursor;  // next successor candidate
  };
  std::vector<Frame> frames;
  for (Element root = 0; root < n; ++root) {
    if (index[root] != unseen) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Subset& succ = g.successors(f.v);
      Element w = f.cursor < n ? (succ.test(f.cursor) ? f.cursor : succ.next(f.cursor)) : static_cast<Element>(n);
      if (w < n) {
        f.cursor = w + 1;
        if (index[w] == unseen) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Element v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        Element x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          comp[x] = static_cast<std::uint32_t>(count);
        } while (x != v);
        ++count;
      }
    }
  }
  return comp;
}

std::vector<std::vector<Element>> source_components(const Digraph& g) {
  std::size_t count = 0;
  auto comp = strongly_connected_components(g, count);
  std::vector<bool> entered(count, false);
  for (Element u = 0; u < g.vertices(); ++u)
    g.successors(u).for_each([&](Element v) {
      if (comp[u] != comp[v]) entered[comp[v]] = true;
    });
  std::vector<std::vector<Element>> members(count);
  for (Element v = 0; v < g.vertices(); ++v) members[comp[v]].push_back(v);
  std::vector<std::vector<Element>> out;
  for (std::size_t c = 0; c < count; ++c)
    if (!entered[c]) out.push_back(std::move(members[c]));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Draw CompleteSampler::draw(Rng&) const {
  Draw d{Digraph(n_), {}};
  for (Element u = 0; u < n_; ++u)
    for (Element v = 0; v < n_; ++v) d.graph.add_edge(u, v);
  return d;
}

FixedSetsSampler::FixedSetsSampler(std::size_t n, std::size_t k) : n_(n), k_(k), targets_(n) {
  if (n == 0 || k == 0 || k >= n) throw DomainError("fixed-sets sampler needs 1 <= k < n");
  for (Element i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= k; ++d) targets_[(i + d) % n].push_back(i);
  for (auto& t : targets_) std::sort(t.begin(), t.end());
}

Draw FixedSetsSampler::draw(Rng& rng) const {
  Element j = static_cast<Element>(rng.below(n_));
  Draw d{Digraph(n_), {j}};
  for (Element i : targets_[j]) d.graph.add_edge(j, i);
  return d;
}

std::vector<std::size_t> graph_process_run(const SpreadSampler& mu, std::size_t t_max, std::uint64_t seed) {
  if (t_max == 0) throw DomainError("the graph process needs t_max >= 1");
  Rng rng(seed);
  Digraph g(mu.vertices());
  std::vector<std::size_t> counts{source_components(g).size()};
  for (std::size_t t = 1; t <= t_max; ++t) {
    g |= mu.sample(rng);
    counts.push_back(source_components(g).size());
  }
  return counts;
}

double directed_lemma_bound(std::size_t n, const Rational& alpha, const Rational& beta, std::size_t t) {
  double a = to_double(alpha);
  return static_cast<double>(n) * std::pow(1.0 - a / 4.0, static_cast<double>(t)) + 2.0 * to_double(beta) / a;
}

AuditReport audit_sampler(const SpreadSampler& mu, std::size_t samples, std::uint64_t seed, double sigmas) {
  if (samples == 0) throw DomainError("an audit needs at least one sample");
  const std::size_t n = mu.vertices();
  std::vector<std::size_t> incoming(n, 0);
  std::vector<std::uint32_t> edge(n * n, 0);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Digraph g = mu.sample(rng);
    Subset entered(n);
    for (Element u = 0; u < n; ++u)
      g.successors(u).for_each([&](Element v) {
        entered.set(v);
        ++edge[u * n + v];
      });
    entered.for_each([&](Element v) { ++incoming[v]; });
  }
  const double N = static_cast<double>(samples);
  const double alpha = std::min(1.0, to_double(mu.alpha()));
  const double per_edge = std::min(1.0, to_double(mu.beta()) / static_cast<double>(n));
  AuditReport r;
  r.samples = samples;
  r.incoming_floor = alpha - sigmas * std::sqrt(alpha * (1 - alpha) / N);
  r.edge_ceiling = per_edge + sigmas * std::sqrt(per_edge * (1 - per_edge) / N);
  for (Element v = 0; v < n; ++v) {
    double f = static_cast<double>(incoming[v]) / N;
    if (f < r.min_incoming) {
      r.min_incoming = f;
      r.worst_vertex = v;
    }
  }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      double f = edge[u * n + v] / N;
      if (f > r.max_edge) {
        r.max_edge = f;
        r.worst_edge = {u, v};
      }
    }
  r.passed = r.min_incoming >= r.incoming_floor && r.max_edge <= r.edge_ceiling;
  return r;
}

}  // namespace spanoid
