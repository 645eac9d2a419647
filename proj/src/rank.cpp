#include "spanoid/rank.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "spanoid/error.hpp"
#include "spanoid/lp.hpp"

namespace spanoid {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::automatic: return "automatic";
    case RankMethod::hitting_set: return "hitting-set";
    case RankMethod::direct_search: return "direct-search";
    case RankMethod::product_lemma: return "product-lemma";
  }
  return "?";
}

namespace {

void require_masks(const Spanoid& sp) {
  if (sp.size() > 64) throw CapacityError("exact rank search supports n <= 64, got n = " + std::to_string(sp.size()));
}

// Greedy spanning set: repeatedly add the smallest element outside the span.
std::size_t greedy_span_size(const Spanoid& sp) {
  const Mask full = low_bits(sp.size());
  Mask cur = sp.span(Mask{0});
  std::size_t size = 0;
  while (cur != full) {
    cur = sp.span(cur | bit(static_cast<Element>(std::countr_zero(~cur & full))));
    ++size;
  }
  return size;
}

// Depth-first search over r-subsets in increasing integer order: the largest
// element is fixed first. An element already in the span of the larger ones
// cannot belong to a minimum witness, and a branch is cut when even all
// smaller elements together with the chosen ones fail to span.
class ColexSearch {
 public:
  ColexSearch(const Spanoid& sp, std::uint64_t budget, std::uint64_t& nodes)
      : sp_(sp), full_(low_bits(sp.size())), budget_(budget), nodes_(nodes) {}

  bool run(std::size_t r, Mask& witness) {
    return dfs(0, sp_.span(Mask{0}), r, static_cast<Element>(sp_.size()), witness);
  }

 private:
  bool dfs(Mask chosen, Mask spanned, std::size_t remaining, Element bound, Mask& witness) {
    if (++nodes_ > budget_) throw Exhausted{};
    if (spanned == full_) {
      witness = chosen;
      return true;
    }
    if (remaining == 0) return false;
    for (Element x = static_cast<Element>(remaining - 1); x < bound; ++x) {
      if (spanned & bit(x)) continue;
      Mask next = sp_.span(spanned | bit(x));
      if (remaining > 1 && sp_.span(next | low_bits(x)) != full_) continue;
      if (remaining == 1 && next != full_) continue;
      if (dfs(chosen | bit(x), next, remaining - 1, x, witness)) return true;
    }
    return false;
  }

 public:
  struct Exhausted {};

 private:
  const Spanoid& sp_;
  Mask full_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
};

Mask canonical_witness(const Spanoid& sp, std::size_t r, std::uint64_t budget, std::uint64_t& nodes,
                       std::size_t lower, std::size_t upper) {
  Mask w = 0;
  try {
    if (!ColexSearch(sp, budget, nodes).run(r, w))
      throw std::logic_error("no spanning set of the computed rank " + std::to_string(r));
  } catch (const ColexSearch::Exhausted&) {
    throw BudgetError("rank witness search exceeded the node budget", lower, upper);
  }
  return w;
}

RankCertificate certify(const Spanoid& sp, std::size_t r, Mask w, RankMethod method, std::uint64_t nodes) {
  RankCertificate c;
  c.rank = r;
  c.witness = Subset::from_mask(sp.size(), w);
  c.method = method;
  c.nodes = nodes;
  if (c.witness.count() != r || !sp.spans_all(c.witness))
    throw std::logic_error("rank witness failed verification");
  return c;
}

class HittingSearch {
 public:
  HittingSearch(std::vector<Mask> sets, std::uint64_t budget) : sets_(std::move(sets)), budget_(budget) {
    std::stable_sort(sets_.begin(), sets_.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  }

  // Lower bound from pairwise disjoint sets (after removing excluded elements).
  static std::size_t packing(const std::vector<Mask>& active, Mask excluded, bool& infeasible) {
    Mask used = 0;
    std::size_t count = 0;
    infeasible = false;
    for (Mask s : active) {
      Mask live = s & ~excluded;
      if (!live) {
        infeasible = true;
        return 0;
      }
      if (!(live & used)) {
        used |= live;
        ++count;
      }
    }
    return count;
  }

  std::size_t greedy() const {
    std::vector<Mask> active = sets_;
    std::size_t size = 0;
    while (!active.empty()) {
      int best_count = -1;
      Element best = 0;
      for (Element e = 0; e < 64; ++e) {
        int c = 0;
        for (Mask s : active) c += (s >> e) & 1;
        if (c > best_count) {
          best_count = c;
          best = e;
        }
      }
      std::erase_if(active, [&](Mask s) { return s & bit(best); });
      ++size;
    }
    return size;
  }

  // Smallest hitting set size, searching below `best`.
  std::size_t solve(std::size_t lower, std::size_t best, std::uint64_t& nodes) {
    best_ = best;
    lower_ = lower;
    nodes_ = &nodes;
    if (best_ > lower_) bb(sets_, 0, 0);
    return best_;
  }

 private:
  void bb(const std::vector<Mask>& active, std::size_t size, Mask excluded) {
    if (++*nodes_ > budget_) throw BudgetError("hitting-set search exceeded the node budget", lower_, best_);
    if (active.empty()) {
      best_ = std::min(best_, size);
      return;
    }
    bool infeasible = false;
    std::size_t lb = packing(active, excluded, infeasible);
    if (infeasible || size + std::max<std::size_t>(lb, 1) >= best_) return;
    Mask branch = 0;
    int fewest = 65;
    for (Mask s : active) {
      int c = popcount(s & ~excluded);
      if (c < fewest) {
        fewest = c;
        branch = s & ~excluded;
      }
    }
    Mask excl = excluded;
    for (Mask rest = branch; rest; rest &= rest - 1) {
      Mask e = rest & -rest;
      std::vector<Mask> next;
      next.reserve(active.size());
      for (Mask s : active)
        if (!(s & e)) next.push_back(s);
      bb(next, size + 1, excl);
      if (best_ <= lower_) return;
      excl |= e;
    }
  }

  std::vector<Mask> sets_;
  std::uint64_t budget_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  std::uint64_t* nodes_ = nullptr;
};

bool minimal_opens_available(const Spanoid& sp, const Limits& limits) {
  return sp.size() <= 64 && (sp.open_generators() || sp.size() <= limits.enumeration_cap);
}

}  // namespace

RankCertificate rank_direct(const Spanoid& sp, const Limits& limits) {
  require_masks(sp);
  const std::size_t upper = greedy_span_size(sp);
  std::uint64_t nodes = 0;
  ColexSearch search(sp, limits.rank_nodes, nodes);
  for (std::size_t r = 0; r <= upper; ++r) {
    Mask w = 0;
    bool found = false;
    try {
      found = search.run(r, w);
    } catch (const ColexSearch::Exhausted&) {
      throw BudgetError("direct rank search exceeded the node budget at size " + std::to_string(r), r, upper);
    }
    if (found) return certify(sp, r, w, RankMethod::direct_search, nodes);
  }
  throw std::logic_error("direct rank search found no spanning set up to the greedy bound");
}

RankCertificate rank_hitting_set(const Spanoid& sp, const Limits& limits) {
  require_masks(sp);
  SetFamily opens = minimal_open_sets(sp, limits);
  std::vector<Mask> sets;
  for (const auto& o : opens.members()) sets.push_back(o.mask());
  std::uint64_t nodes = 0;
  if (sets.empty()) return certify(sp, 0, 0, RankMethod::hitting_set, nodes);

  HittingSearch search(sets, limits.rank_nodes);
  bool infeasible = false;
  std::size_t lower = HittingSearch::packing(sets, 0, infeasible);
  Integer lp = ceil(lp_cover(sp, limits));
  lower = std::max(lower, lp.convert_to<std::size_t>());
  std::size_t upper = std::min(search.greedy(), greedy_span_size(sp));
  std::size_t r = search.solve(lower, upper, nodes);
  Mask w = canonical_witness(sp, r, limits.rank_nodes, nodes, r, r);
  return certify(sp, r, w, RankMethod::hitting_set, nodes);
}

RankCertificate rank(const Spanoid& sp, RankMethod method, const Limits& limits) {
  switch (method) {
    case RankMethod::hitting_set: return rank_hitting_set(sp, limits);
    case RankMethod::direct_search: return rank_direct(sp, limits);
    case RankMethod::product_lemma:
      throw DomainError("the product-lemma certificate applies to semidirect products only");
    case RankMethod::automatic: break;
  }
  return minimal_opens_available(sp, limits) ? rank_hitting_set(sp, limits) : rank_direct(sp, limits);
}

bool LogBound::admits(std::size_t rank) const {
  return rank < 64 && (std::uint64_t{1} << rank) <= closed;
}

LogBound rank_log_bound(const Spanoid& sp, const Limits& limits) {
  LogBound b;
  b.closed = closed_sets(sp, limits).size();
  b.log2 = std::log2(static_cast<double>(b.closed));
  return b;
}

bool FranklResult::meets_bound() const {
  if (rank == 0) return members == 0;
  return count * rank >= members;
}

FranklResult frankl_max_frequency(const SetFamily& fam, const Limits& limits) {
  if (!fam.contains(Subset(fam.universe())))
    throw ValidationError("family must contain the empty set");
  if (auto gap = fam.union_gap()) throw ValidationError("family is not union-closed");
  FranklResult out;
  std::vector<std::size_t> counts(fam.universe(), 0);
  for (const auto& m : fam.members()) {
    if (m.none()) continue;
    ++out.members;
    m.for_each([&](Element e) { ++counts[e]; });
  }
  if (out.members == 0) throw ValidationError("family has no nonempty member");
  for (Element e = 0; e < counts.size(); ++e)
    if (counts[e] > out.count) {
      out.count = counts[e];
      out.element = e;
    }
  out.rank = rank(from_closed_family(fam.complements(), limits), RankMethod::automatic, limits).rank;
  return out;
}

}  // namespace spanoid
