#include "spanoid/spanoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "spanoid/error.hpp"

namespace spanoid {

bool rule_less(const Rule& a, const Rule& b) {
  if (a.premise != b.premise) return set_less(a.premise, b.premise);
  return a.conclusion < b.conclusion;
}

std::string describe(const Rule& r) {
  std::string s = "({";
  for (std::size_t k = 0; k < r.premise.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(r.premise[k] + 1);
  }
  return s + "}, " + std::to_string(r.conclusion + 1) + ")";
}

Spanoid::Spanoid(std::size_t n, std::vector<Rule> rules, const Limits& limits)
    : n_(n), rules_(std::move(rules)) {
  if (n_ == 0) throw DomainError("spanoid needs n >= 1");
  if (rules_.size() > limits.rule_cap)
    throw CapacityError("spanoid has " + std::to_string(rules_.size()) +
                        " rules, above the cap of " + std::to_string(limits.rule_cap));
  for (auto& r : rules_) {
    std::sort(r.premise.begin(), r.premise.end());
    r.premise.erase(std::unique(r.premise.begin(), r.premise.end()), r.premise.end());
    bool bad = r.conclusion >= n_ ||
               std::any_of(r.premise.begin(), r.premise.end(), [&](Element e) { return e >= n_; });
    if (bad)
      throw DomainError("rule " + describe(r) + " has an index outside 1.." + std::to_string(n_));
  }
  std::sort(rules_.begin(), rules_.end(), rule_less);
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  index();
}

void Spanoid::index() {
  if (n_ <= 64) {
    premise_masks_.reserve(rules_.size());
    conclusion_bits_.reserve(rules_.size());
    for (const auto& r : rules_) {
      Mask m = 0;
      for (Element e : r.premise) m |= bit(e);
      premise_masks_.push_back(m);
      conclusion_bits_.push_back(bit(r.conclusion));
    }
    return;
  }
  occurs_.assign(n_, {});
  for (std::uint32_t k = 0; k < rules_.size(); ++k) {
    if (rules_[k].premise.empty()) initial_.push_back(k);
    for (Element e : rules_[k].premise) occurs_[e].push_back(k);
  }
}

Mask Spanoid::span(Mask t) const {
  if (n_ > 64) throw std::logic_error("mask span needs n <= 64");
  Mask cur = t;
  const std::size_t m = premise_masks_.size();
  const Mask* prem = premise_masks_.data();
  const Mask* concl = conclusion_bits_.data();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(cur & concl[k]) && !(prem[k] & ~cur)) {
        cur |= concl[k];
        changed = true;
      }
    }
  }
  return cur;
}

Subset Spanoid::span(const Subset& t) const {
  if (t.universe() != n_) throw DomainError("subset universe does not match spanoid size");
  if (n_ <= 64) return Subset::from_mask(n_, span(t.mask()));
  // Forward chaining: each rule fires once its missing-premise count hits zero.
  Subset cur = t;
  std::vector<std::uint32_t> missing(rules_.size());
  for (std::size_t k = 0; k < rules_.size(); ++k)
    missing[k] = static_cast<std::uint32_t>(rules_[k].premise.size());
  std::vector<Element> queue = t.elements();
  auto fire = [&](std::uint32_t k) {
    Element c = rules_[k].conclusion;
    if (!cur.test(c)) {
      cur.set(c);
      queue.push_back(c);
    }
  };
  for (std::uint32_t k : initial_) fire(k);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::uint32_t k : occurs_[queue[head]])
      if (--missing[k] == 0) fire(k);
  return cur;
}

bool Spanoid::has_rule(const Rule& r) const {
  return std::binary_search(rules_.begin(), rules_.end(), r, rule_less);
}

std::size_t Spanoid::empty_premise_rules() const {
  return static_cast<std::size_t>(std::count_if(
      rules_.begin(), rules_.end(), [](const Rule& r) { return r.premise.empty(); }));
}

std::vector<std::string> Spanoid::lint() const {
  std::vector<std::string> out;
  for (const auto& r : rules_) {
    if (r.premise.empty())
      out.push_back("rule " + describe(r) + " has an empty premise");
    else if (std::binary_search(r.premise.begin(), r.premise.end(), r.conclusion))
      out.push_back("rule " + describe(r) + " is vacuous (conclusion in premise)");
  }
  return out;
}

namespace {

// Inclusion-minimal members, deduplicated.
std::vector<Subset> minimal_members(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const Subset& a, const Subset& b) {
              auto ca = a.count(), cb = b.count();
              return ca != cb ? ca < cb : a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Subset> out;
  for (const auto& s : sets) {
    bool dominated = std::any_of(out.begin(), out.end(),
                                 [&](const Subset& m) { return m.is_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

void transversals(const std::vector<Subset>& family, Subset& chosen, Subset forbidden,
                  std::vector<Subset>& out) {
  const Subset* unhit = nullptr;
  for (const auto& f : family)
    if (!f.intersects(chosen)) {
      unhit = &f;
      break;
    }
  if (!unhit) {
    out.push_back(chosen);
    return;
  }
  Subset options = *unhit - forbidden;
  options.for_each([&](Element x) {
    chosen.set(x);
    transversals(family, chosen, forbidden, out);
    chosen.reset(x);
    forbidden.set(x);
  });
}

std::vector<Subset> minimal_transversals(const std::vector<Subset>& family, std::size_t n) {
  std::vector<Subset> found;
  Subset chosen(n);
  transversals(family, chosen, Subset(n), found);
  std::vector<Subset> out;
  for (auto& t : found) {
    bool minimal = true;
    t.for_each([&](Element x) {
      if (!minimal) return;
      Subset rest = t;
      rest.reset(x);
      if (std::all_of(family.begin(), family.end(),
                      [&](const Subset& f) { return f.intersects(rest); }))
        minimal = false;
    });
    if (minimal) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Spanoid Spanoid::from_open_generators(std::size_t n, const std::vector<Subset>& opens,
                                      const Limits& limits) {
  if (n == 0) throw DomainError("spanoid needs n >= 1");
  std::vector<Subset> gens;
  for (const auto& g : opens) {
    if (g.universe() != n) throw DomainError("open set universe does not match n");
    if (!g.none()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Keep union-irreducible generators only; the others add no rules.
  std::vector<Subset> irreducible;
  for (const auto& g : gens) {
    Subset covered(n);
    for (const auto& h : gens)
      if (h != g && h.is_subset_of(g)) covered |= h;
    if (covered != g) irreducible.push_back(g);
  }
  std::sort(irreducible.begin(), irreducible.end());

  std::vector<Rule> rules;
  for (Element e = 0; e < n; ++e) {
    std::vector<Subset> hit;
    bool blocked = false;
    for (const auto& g : irreducible) {
      if (!g.test(e)) continue;
      Subset rest = g;
      rest.reset(e);
      if (rest.none()) blocked = true;
      hit.push_back(std::move(rest));
    }
    if (blocked) continue;  // {e} is open: nothing outside e derives e
    for (const auto& t : minimal_transversals(minimal_members(std::move(hit)), n)) {
      rules.push_back(Rule{t.elements(), e});
      if (rules.size() > limits.rule_cap)
        throw CapacityError("rule basis of the generated spanoid exceeds the rule cap");
    }
  }
  Spanoid sp(n, std::move(rules), limits);
  sp.generators_ = std::make_shared<const std::vector<Subset>>(std::move(irreducible));
  return sp;
}

bool same_closure(const Spanoid& a, const Spanoid& b, const Limits& limits) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n > limits.enumeration_cap)
    throw CapacityError("closure comparison needs n <= " + std::to_string(limits.enumeration_cap));
  for (Mask t = 0; t < (Mask{1} << n); ++t)
    if (a.span(t) != b.span(t)) return false;
  return true;
}

}  // namespace spanoid
