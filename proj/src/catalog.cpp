#include "spanoid/catalog.hpp"

#include "spanoid/error.hpp"

namespace spanoid {

Spanoid pentagon() {
  return Spanoid(5, {{{0, 1}, 3}, {{1, 2}, 4}, {{2, 3}, 0}, {{3, 4}, 1}, {{4, 0}, 2}});
}

SetRepresentation pentagon_union_representation() {
  SetRepresentation rep;
  rep.universe = 5;
  rep.flavor = SetRepresentation::Flavor::union_;
  for (Element i = 0; i < 5; ++i) rep.sets.push_back(Subset::of(5, {(i + 4) % 5, (i + 1) % 5}));
  return rep;
}

SetFamily xu_closed_sets() {
  return SetFamily(4, {Subset(4), Subset::of(4, {0}), Subset::of(4, {3}), Subset::of(4, {1, 3}),
                       Subset::of(4, {2, 3}), Subset::full(4)});
}

Spanoid xu_spanoid() { return from_closed_family(xu_closed_sets()); }

Spanoid free_spanoid(std::size_t n) { return Spanoid(n, {}); }

Spanoid uniform_matroid(std::size_t r, std::size_t n) {
  if (r == 0 || r > n || n > 20) throw DomainError("uniform matroid needs 1 <= r <= n <= 20");
  std::vector<Rule> rules;
  for (Mask a = low_bits(r); a < (Mask{1} << n); a = next_combination(a))
    for (Element i = 0; i < n; ++i)
      if (!(a & bit(i))) rules.push_back(Rule{Subset::from_mask(n, a).elements(), i});
  return Spanoid(n, std::move(rules));
}

Spanoid named_spanoid(const std::string& name) {
  if (name == "pentagon") return pentagon();
  if (name == "xu") return xu_spanoid();
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("bad number in spanoid name '" + name + "'");
    return std::stoul(s);
  };
  if (name.rfind("free:", 0) == 0) return free_spanoid(number(name.substr(5)));
  if (name.rfind("uniform:", 0) == 0) {
    auto rest = name.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw DomainError("expected uniform:<r>:<n>");
    return uniform_matroid(number(rest.substr(0, colon)), number(rest.substr(colon + 1)));
  }
  throw DomainError("unknown spanoid name '" + name + "'");
}

}  // namespace spanoid
