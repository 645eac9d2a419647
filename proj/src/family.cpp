#include "spanoid/family.hpp"

#include <algorithm>
#include <string>

#include "spanoid/error.hpp"

namespace spanoid {

SetFamily::SetFamily(std::size_t n, std::vector<Subset> members) : n_(n), members_(std::move(members)) {
  for (const auto& m : members_)
    if (m.universe() != n_) throw DomainError("family member has the wrong universe size");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const Subset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::optional<std::pair<Subset, Subset>> SetFamily::intersection_gap() const {
  for (std::size_t a = 0; a < members_.size(); ++a)
    for (std::size_t b = a + 1; b < members_.size(); ++b)
      if (!contains(members_[a] & members_[b])) return std::make_pair(members_[a], members_[b]);
  return std::nullopt;
}

std::optional<std::pair<Subset, Subset>> SetFamily::union_gap() const {
  for (std::size_t a = 0; a < members_.size(); ++a)
    for (std::size_t b = a + 1; b < members_.size(); ++b)
      if (!contains(members_[a] | members_[b])) return std::make_pair(members_[a], members_[b]);
  return std::nullopt;
}

bool SetFamily::intersection_closed() const {
  return contains(Subset::full(n_)) && !intersection_gap();
}

bool SetFamily::union_closed() const { return contains(Subset(n_)) && !union_gap(); }

SetFamily SetFamily::complements() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.complement());
  return SetFamily(n_, std::move(out));
}

SetFamily SetFamily::minimal_nonempty() const {
  std::vector<Subset> sorted;
  for (const auto& m : members_)
    if (!m.none()) sorted.push_back(m);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Subset& a, const Subset& b) { return a.count() < b.count(); });
  std::vector<Subset> out;
  for (const auto& s : sorted)
    if (std::none_of(out.begin(), out.end(), [&](const Subset& m) { return m.is_subset_of(s); }))
      out.push_back(s);
  return SetFamily(n_, std::move(out));
}

namespace {

void require_enumerable(const Spanoid& sp, const Limits& limits, const char* what) {
  if (sp.size() > limits.enumeration_cap)
    throw CapacityError(std::string(what) + " enumerates 2^n subsets; n = " +
                        std::to_string(sp.size()) + " exceeds the cap " +
                        std::to_string(limits.enumeration_cap) +
                        " (use span/models for individual subsets)");
}

std::vector<Mask> closed_masks(const Spanoid& sp, const Limits& limits, const char* what) {
  require_enumerable(sp, limits, what);
  std::vector<Mask> out;
  const Mask end = Mask{1} << sp.size();
  for (Mask t = 0; t < end; ++t)
    if (sp.span(t) == t) out.push_back(t);
  return out;
}

}  // namespace

SetFamily closed_sets(const Spanoid& sp, const Limits& limits) {
  std::vector<Subset> members;
  for (Mask m : closed_masks(sp, limits, "closed_sets")) members.push_back(Subset::from_mask(sp.size(), m));
  return SetFamily(sp.size(), std::move(members));
}

SetFamily open_sets(const Spanoid& sp, const Limits& limits) {
  const Mask full = low_bits(sp.size());
  std::vector<Subset> members;
  for (Mask m : closed_masks(sp, limits, "open_sets"))
    members.push_back(Subset::from_mask(sp.size(), full & ~m));
  return SetFamily(sp.size(), std::move(members));
}

SetFamily minimal_open_sets(const Spanoid& sp, const Limits& limits) {
  if (const auto* gens = sp.open_generators()) return SetFamily(sp.size(), *gens).minimal_nonempty();
  // The complement of a closed B != [n] is a minimal open exactly when adding
  // any single outside element already spans everything.
  const std::size_t n = sp.size();
  const Mask full = low_bits(n);
  std::vector<Subset> members;
  for (Mask b : closed_masks(sp, limits, "minimal_open_sets")) {
    if (b == full) continue;
    bool maximal = true;
    for (Mask rest = full & ~b; rest && maximal; rest &= rest - 1)
      maximal = sp.span(b | (rest & -rest)) == full;
    if (maximal) members.push_back(Subset::from_mask(n, full & ~b));
  }
  return SetFamily(n, std::move(members));
}

SetFamily irreducible_open_sets(const Spanoid& sp, const Limits& limits) {
  if (const auto* gens = sp.open_generators()) return SetFamily(sp.size(), *gens);
  // O = [n] \ B is irreducible iff some x in O lies in span(B + y) for every
  // other y in O, i.e. no smaller open inside O contains x.
  const std::size_t n = sp.size();
  const Mask full = low_bits(n);
  std::vector<Subset> members;
  for (Mask b : closed_masks(sp, limits, "irreducible_open_sets")) {
    const Mask open = full & ~b;
    if (!open) continue;
    Mask candidates = open;
    for (Mask rest = open; rest && candidates; rest &= rest - 1) {
      Mask y = rest & -rest;
      candidates &= sp.span(b | y) | y;
    }
    if (candidates) members.push_back(Subset::from_mask(n, open));
  }
  return SetFamily(n, std::move(members));
}

Spanoid from_closed_family(const SetFamily& fam, const Limits& limits) {
  const std::size_t n = fam.universe();
  if (n == 0) throw DomainError("closed family needs n >= 1");
  if (!fam.contains(Subset::full(n)))
    throw ValidationError("closed family does not contain the ground set");
  if (auto gap = fam.intersection_gap()) {
    auto show = [](const Subset& s) {
      std::string out = "{";
      bool first = true;
      s.for_each([&](Element e) {
        out += (first ? "" : ",") + std::to_string(e + 1);
        first = false;
      });
      return out + "}";
    };
    throw ValidationError("family is not intersection-closed: " + show(gap->first) + " and " +
                          show(gap->second) + " meet outside the family");
  }
  return Spanoid::from_open_generators(n, fam.complements().members(), limits);
}

Spanoid from_union_family(std::size_t u, const std::vector<Subset>& sets, const Limits& limits) {
  if (sets.empty()) throw DomainError("union family needs at least one set");
  const std::size_t n = sets.size();
  std::vector<Subset> gens(u, Subset(n));
  for (Element i = 0; i < n; ++i) {
    if (sets[i].universe() != u) throw DomainError("set " + std::to_string(i + 1) + " has the wrong universe");
    sets[i].for_each([&](Element x) { gens[x].set(i); });
  }
  return Spanoid::from_open_generators(n, gens, limits);
}

SetRepresentation SetRepresentation::complemented() const {
  SetRepresentation out;
  out.universe = universe;
  out.flavor = flavor == Flavor::intersection ? Flavor::union_ : Flavor::intersection;
  for (const auto& s : sets) out.sets.push_back(s.complement());
  return out;
}

SetRepresentation set_representation(const Spanoid& sp, const Limits& limits) {
  SetFamily closed = closed_sets(sp, limits);
  SetRepresentation rep;
  rep.universe = closed.size();
  rep.flavor = SetRepresentation::Flavor::intersection;
  rep.sets.assign(sp.size(), Subset(closed.size()));
  for (Element k = 0; k < closed.size(); ++k)
    closed.members()[k].for_each([&](Element i) { rep.sets[i].set(k); });
  return rep;
}

Spanoid spanoid_of(const SetRepresentation& rep, const Limits& limits) {
  if (rep.flavor == SetRepresentation::Flavor::union_) return from_union_family(rep.universe, rep.sets, limits);
  return from_union_family(rep.universe, rep.complemented().sets, limits);
}

std::size_t intersection_dimension(const SetRepresentation& rep) {
  const std::size_t n = rep.sets.size();
  if (n > 63) throw CapacityError("intersection_dimension searches subsets of at most 63 sets");
  Subset target = Subset::full(rep.universe);
  for (const auto& s : rep.sets) target &= s;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (target == Subset::full(rep.universe)) return 0;
      continue;
    }
    for (Mask pick = low_bits(k); pick < (Mask{1} << n); pick = next_combination(pick)) {
      Subset meet = Subset::full(rep.universe);
      for (Mask p = pick; p; p &= p - 1) meet &= rep.sets[std::countr_zero(p)];
      if (meet == target) return k;
    }
  }
  return n;
}

}  // namespace spanoid
