#include "spanoid/product.hpp"

#include <stdexcept>

#include "spanoid/error.hpp"
#include "spanoid/family.hpp"

namespace spanoid {

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::dot: return "dot";
    case ProductKind::tensor: return "tensor";
    case ProductKind::semidirect: return "semidirect";
  }
  return "?";
}

ProductKind parse_product_kind(const std::string& text) {
  if (text == "dot") return ProductKind::dot;
  if (text == "tensor") return ProductKind::tensor;
  if (text == "semidirect") return ProductKind::semidirect;
  throw DomainError("unknown product kind '" + text + "' (expected dot, tensor or semidirect)");
}

namespace {

ProductSpanoid wrap(Spanoid sp, const Spanoid& a, const Spanoid& b, ProductKind kind) {
  return ProductSpanoid{std::move(sp), a.size(), b.size(), kind, std::make_shared<const Spanoid>(a),
                        std::make_shared<const Spanoid>(b)};
}

// Instantiate the two schemata over the given factor inferences.
std::vector<Rule> schemata(ProductKind kind, std::size_t n1, std::size_t n2, const std::vector<Rule>& left,
                           const std::vector<Rule>& right, const Limits& limits) {
  auto at = [n2](Element i, Element j) { return static_cast<Element>(i * n2 + j); };
  std::vector<Rule> rules;
  auto push = [&](Rule r) {
    rules.push_back(std::move(r));
    if (rules.size() > limits.rule_cap) throw CapacityError("product rule count exceeds the rule cap");
  };
  for (const auto& r : left)
    for (Element j = 0; j < n2; ++j) {
      Rule out;
      out.conclusion = at(r.conclusion, j);
      for (Element i : r.premise) {
        if (kind == ProductKind::semidirect)
          for (Element jj = 0; jj < n2; ++jj) out.premise.push_back(at(i, jj));
        else
          out.premise.push_back(at(i, j));
      }
      push(std::move(out));
    }
  for (const auto& r : right)
    for (Element i = 0; i < n1; ++i) {
      Rule out;
      out.conclusion = at(i, r.conclusion);
      for (Element j : r.premise) out.premise.push_back(at(i, j));
      push(std::move(out));
    }
  return rules;
}

std::vector<Rule> derived_inferences(const Spanoid& sp, const Limits& limits) {
  if (sp.size() > limits.enumeration_cap) throw CapacityError("derived inferences need an enumerable factor");
  std::vector<Rule> out;
  const Mask full = low_bits(sp.size());
  for (Mask a = 0; a <= full; ++a) {
    Mask gained = sp.span(a) & ~a;
    for (Mask g = gained; g; g &= g - 1) {
      Rule r;
      r.premise = Subset::from_mask(sp.size(), a).elements();
      r.conclusion = static_cast<Element>(std::countr_zero(g));
      out.push_back(std::move(r));
    }
    if (a == full) break;
  }
  return out;
}

Subset product_set(const Subset& a, const Subset& b) {
  const std::size_t n2 = b.universe();
  Subset out(a.universe() * n2);
  a.for_each([&](Element i) { b.for_each([&](Element j) { out.set(static_cast<Element>(i * n2 + j)); }); });
  return out;
}

}  // namespace

ProductSpanoid product_semidirect(const Spanoid& a, const Spanoid& b, const Limits& limits) {
  return wrap(Spanoid(a.size() * b.size(),
                      schemata(ProductKind::semidirect, a.size(), b.size(), a.rules(), b.rules(), limits), limits),
              a, b, ProductKind::semidirect);
}

ProductSpanoid product_tensor(const Spanoid& a, const Spanoid& b, const Limits& limits) {
  return wrap(Spanoid(a.size() * b.size(),
                      schemata(ProductKind::tensor, a.size(), b.size(), a.rules(), b.rules(), limits), limits),
              a, b, ProductKind::tensor);
}

ProductSpanoid product_dot(const Spanoid& a, const Spanoid& b, const Limits& limits) {
  // Every open set is a union of irreducible ones, so products of irreducible
  // opens generate the same union-closed family.
  SetFamily ia = irreducible_open_sets(a, limits);
  SetFamily ib = irreducible_open_sets(b, limits);
  std::vector<Subset> gens;
  for (const auto& x : ia.members())
    for (const auto& y : ib.members()) gens.push_back(product_set(x, y));
  Spanoid sp = Spanoid::from_open_generators(a.size() * b.size(), gens, limits);

  std::vector<Subset> expected;
  SetFamily ma = minimal_open_sets(a, limits);
  SetFamily mb = minimal_open_sets(b, limits);
  for (const auto& x : ma.members())
    for (const auto& y : mb.members()) expected.push_back(product_set(x, y));
  if (minimal_open_sets(sp, limits) != SetFamily(sp.size(), expected))
    throw std::logic_error("minimal opens of the dot product are not the products of minimal opens");
  return wrap(std::move(sp), a, b, ProductKind::dot);
}

ProductSpanoid product(ProductKind kind, const Spanoid& a, const Spanoid& b, const Limits& limits) {
  switch (kind) {
    case ProductKind::dot: return product_dot(a, b, limits);
    case ProductKind::tensor: return product_tensor(a, b, limits);
    case ProductKind::semidirect: return product_semidirect(a, b, limits);
  }
  throw std::logic_error("unknown product kind");
}

Spanoid product_over_derived(ProductKind kind, const Spanoid& a, const Spanoid& b, const Limits& limits) {
  if (kind == ProductKind::dot) throw DomainError("the dot product is not defined by rule schemata");
  return Spanoid(a.size() * b.size(),
                 schemata(kind, a.size(), b.size(), derived_inferences(a, limits), derived_inferences(b, limits),
                          limits),
                 limits);
}

RankCertificate semidirect_rank(const ProductSpanoid& p, const RankCertificate& left, const RankCertificate& right) {
  if (p.kind != ProductKind::semidirect) throw DomainError("the product lemma applies to semidirect products");
  RankCertificate c;
  c.rank = left.rank * right.rank;
  c.witness = product_set(left.witness, right.witness);
  c.method = RankMethod::product_lemma;
  c.nodes = left.nodes + right.nodes;
  if (c.witness.count() != c.rank || !p.spanoid.spans_all(c.witness))
    throw std::logic_error("product witness does not span the semidirect product");
  return c;
}

RankCertificate semidirect_rank(const ProductSpanoid& p, const Limits& limits) {
  return semidirect_rank(p, rank(*p.left, RankMethod::automatic, limits), rank(*p.right, RankMethod::automatic, limits));
}

}  // namespace spanoid
