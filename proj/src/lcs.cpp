#include "spanoid/lcs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spanoid/error.hpp"

namespace spanoid {

std::optional<LcsViolation> validate_lcs(const LcsInstance& inst) {
  using Kind = LcsViolation::Kind;
  const std::size_t n = inst.spanoid.size();
  if (inst.q < 2) return LcsViolation{Kind::shape, 0, "q must be at least 2"};
  if (inst.delta <= 0 || inst.delta > 1) return LcsViolation{Kind::shape, 0, "delta must lie in (0, 1]"};
  if (inst.matchings.size() != n)
    return LcsViolation{Kind::shape, 0, "expected one matching per element, got " + std::to_string(inst.matchings.size())};
  for (Element i = 0; i < n; ++i) {
    const std::string who = "element " + std::to_string(i + 1);
    Subset used(n);
    for (const auto& t : inst.matchings[i]) {
      std::vector<Element> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      if (sorted.size() != inst.q || t.size() != inst.q)
        return LcsViolation{Kind::arity, i, who + ": a matching set does not have q distinct elements"};
      if (sorted.back() >= n) return LcsViolation{Kind::range, i, who + ": a matching set leaves 1.." + std::to_string(n)};
      if (std::binary_search(sorted.begin(), sorted.end(), i))
        return LcsViolation{Kind::self, i, who + ": a matching set contains the element itself"};
      for (Element e : sorted) {
        if (used.test(e))
          return LcsViolation{Kind::overlap, i, who + ": matching sets overlap at " + std::to_string(e + 1)};
        used.set(e);
      }
      if (!inst.spanoid.has_rule(Rule{sorted, i}))
        return LcsViolation{Kind::missing_rule, i, who + ": no stored rule for a matching set"};
    }
    if (Rational(inst.matchings[i].size()) < inst.delta * n)
      return LcsViolation{Kind::too_small, i, who + ": matching has " + std::to_string(inst.matchings[i].size()) +
                                                  " sets, fewer than delta*n = " + to_string(inst.delta * n)};
  }
  return std::nullopt;
}

LcsInstance hadamard_spanoid(std::size_t k, const Limits& limits) {
  if (k < 2 || k > 20) throw DomainError("hadamard spanoid needs 2 <= k <= 20, got " + std::to_string(k));
  const std::size_t n = (std::size_t{1} << k) - 1;
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs > limits.rule_cap)
    throw CapacityError("hadamard spanoid for k = " + std::to_string(k) + " has " + std::to_string(pairs) +
                        " rules, above the cap of " + std::to_string(limits.rule_cap));
  std::vector<Rule> rules;
  rules.reserve(pairs);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      rules.push_back(Rule{{static_cast<Element>(a - 1), static_cast<Element>(b - 1)}, static_cast<Element>((a ^ b) - 1)});
  std::vector<Matching> matchings(n);
  for (std::size_t v = 1; v <= n; ++v)
    for (std::size_t a = 1; a <= n; ++a) {
      std::size_t b = a ^ v;
      if (b != 0 && a < b) matchings[v - 1].push_back({static_cast<Element>(a - 1), static_cast<Element>(b - 1)});
    }
  return LcsInstance{Spanoid(n, std::move(rules), limits), 2, Rational(n - 1, 2 * n), std::move(matchings)};
}

LcsInstance random_qlcs(std::size_t n, std::size_t q, std::uint64_t seed, const Limits& limits) {
  if (q < 3) throw DomainError("random q-LCS needs q >= 3, got " + std::to_string(q));
  if (n < 2 * q) throw DomainError("random q-LCS needs n >= 2q, got n = " + std::to_string(n));
  const std::size_t m = n / (2 * q);
  Rng rng(seed);
  std::vector<Rule> rules;
  std::vector<Matching> matchings(n);
  for (Element i = 0; i < n; ++i) {
    std::vector<Element> others;
    for (Element e = 0; e < n; ++e)
      if (e != i) others.push_back(e);
    rng.shuffle(others);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Element> t(others.begin() + static_cast<std::ptrdiff_t>(b * q),
                             others.begin() + static_cast<std::ptrdiff_t>((b + 1) * q));
      std::sort(t.begin(), t.end());
      rules.push_back(Rule{t, i});
      matchings[i].push_back(std::move(t));
    }
    std::sort(matchings[i].begin(), matchings[i].end(), set_less);
  }
  return LcsInstance{Spanoid(n, std::move(rules), limits), q, Rational(m, n), std::move(matchings)};
}

PairSampler::PairSampler(const LcsInstance& inst) : n_(inst.spanoid.size()), delta_(inst.delta), by_pivot_(n_) {
  if (inst.q != 2) throw DomainError("the pair sampler needs a 2-LCS");
  for (Element i = 0; i < n_; ++i)
    for (const auto& t : inst.matchings[i]) {
      by_pivot_[t[0]].emplace_back(t[1], i);
      by_pivot_[t[1]].emplace_back(t[0], i);
    }
}

Draw PairSampler::draw(Rng& rng) const {
  Element pivot = static_cast<Element>(rng.below(n_));
  Draw d{Digraph(n_), {pivot}};
  for (const auto& [j, i] : by_pivot_[pivot]) d.graph.add_edge(j, i);
  return d;
}

SubsetSampler::SubsetSampler(const LcsInstance& inst) : inst_(&inst) {
  if (inst.q < 3) throw DomainError("the subset sampler needs q >= 3");
  const double n = static_cast<double>(inst.spanoid.size());
  const double delta = to_double(inst.delta);
  const double e = 1.0 / static_cast<double>(inst.q - 1);
  inclusion_ = std::min(1.0, std::pow(delta * n, -e));
  threshold_ = 4.0 * std::pow(delta, -e) * std::pow(n, static_cast<double>(inst.q - 2) * e);
}

Draw SubsetSampler::draw(Rng& rng) const {
  const std::size_t n = inst_->spanoid.size();
  Subset j(n);
  for (Element e = 0; e < n; ++e)
    if (rng.bernoulli(inclusion_)) j.set(e);
  Draw d{Digraph(n), {}};
  if (static_cast<double>(j.count()) >= threshold_) return d;
  d.chosen = j.elements();
  for (Element i = 0; i < n; ++i) {
    std::vector<const std::vector<Element>*> ready;
    for (const auto& t : inst_->matchings[i])
      if (std::all_of(t.begin(), t.end() - 1, [&](Element e) { return j.test(e); })) ready.push_back(&t);
    if (ready.empty()) continue;
    const auto& t = *ready[rng.below(ready.size())];
    d.graph.add_edge(t.back(), i);
  }
  return d;
}

std::size_t default_steps_2lcs(const LcsInstance& inst) {
  const double n = static_cast<double>(inst.spanoid.size());
  return static_cast<std::size_t>(std::max(1.0, std::ceil(8.0 / to_double(inst.delta) * std::log(n))));
}

std::size_t default_steps_qlcs(const LcsInstance& inst) {
  const double n = static_cast<double>(inst.spanoid.size());
  return static_cast<std::size_t>(std::max(1.0, std::ceil(16.0 * std::log(n))));
}

namespace {

SpanningRun run_process(const LcsInstance& inst, const SpreadSampler& mu, std::size_t steps, std::uint64_t seed,
                        const ProcessOptions& options) {
  if (options.retries == 0) throw DomainError("retries must be at least 1");
  if (auto bad = validate_lcs(inst)) throw DomainError("invalid LCS instance: " + bad->message);
  const std::size_t n = inst.spanoid.size();
  std::size_t smallest = n + 1;
  for (std::size_t attempt = 0; attempt < options.retries; ++attempt) {
    Rng rng(split_seed(seed, attempt));
    Digraph g(n);
    Subset picked(n);
    SpanningRun run;
    run.attempts = attempt + 1;
    bool have = false;
    for (std::size_t t = 1; t <= steps; ++t) {
      Draw d = mu.draw(rng);
      for (Element u = 0; u < n; ++u)
        d.graph.successors(u).for_each([&](Element v) { run.transcript.push_back({t, u, v}); });
      for (Element e : d.chosen) picked.set(e);
      run.draws.push_back(std::move(d.chosen));
      g |= d.graph;
      if (!options.best_prefix && t < steps) continue;
      auto sources = source_components(g);
      Subset candidate = picked;
      for (const auto& c : sources) candidate.set(c.front());
      if (!have || candidate.count() < run.set.count()) {
        run.set = std::move(candidate);
        run.steps = t;
        run.sources = sources.size();
        have = true;
      }
    }
    if (!inst.spanoid.spans_all(run.set)) continue;
    smallest = std::min(smallest, run.set.count());
    if (options.max_size && run.set.count() > *options.max_size) continue;
    return run;
  }
  throw RetriesExhausted("no verified spanning set" +
                         (options.max_size ? " of size <= " + std::to_string(*options.max_size) : std::string()) +
                         " within " + std::to_string(options.retries) + " attempts (smallest verified size " +
                         (smallest <= n ? std::to_string(smallest) : std::string("none")) + ")");
}

}  // namespace

SpanningRun spanning_set_2lcs(const LcsInstance& inst, std::uint64_t seed, const ProcessOptions& options) {
  PairSampler mu(inst);
  return run_process(inst, mu, options.steps.value_or(default_steps_2lcs(inst)), seed, options);
}

SpanningRun spanning_set_qlcs(const LcsInstance& inst, std::uint64_t seed, const ProcessOptions& options) {
  SubsetSampler mu(inst);
  return run_process(inst, mu, options.steps.value_or(default_steps_qlcs(inst)), seed, options);
}

}  // namespace spanoid
