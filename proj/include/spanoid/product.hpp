#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>

#include "spanoid/limits.hpp"
#include "spanoid/rank.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

enum class ProductKind { dot, tensor, semidirect };

std::string to_string(ProductKind k);
ProductKind parse_product_kind(const std::string& text);

// Element (i, j) of the product sits at i·n2 + j (0-based).
struct ProductSpanoid {
  Spanoid spanoid;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  ProductKind kind = ProductKind::dot;
  std::shared_ptr<const Spanoid> left;
  std::shared_ptr<const Spanoid> right;

  Element index(Element i, Element j) const { return static_cast<Element>(i * n2 + j); }
  std::pair<Element, Element> coordinates(Element e) const {
    return {static_cast<Element>(e / n2), static_cast<Element>(e % n2)};
  }
};

// ⋉:  A ⊨ i gives A×X2 ⊨ (i,j) for every j;  B ⊨ j gives {i}×B ⊨ (i,j) for every i.
ProductSpanoid product_semidirect(const Spanoid& a, const Spanoid& b, const Limits& limits = default_limits());
// ⊗:  A ⊨ i gives A×{j} ⊨ (i,j);  B ⊨ j gives {i}×B ⊨ (i,j).
ProductSpanoid product_tensor(const Spanoid& a, const Spanoid& b, const Limits& limits = default_limits());
// ⊙:  open sets are the unions of A×B with A, B open in the factors.
ProductSpanoid product_dot(const Spanoid& a, const Spanoid& b, const Limits& limits = default_limits());

ProductSpanoid product(ProductKind kind, const Spanoid& a, const Spanoid& b,
                       const Limits& limits = default_limits());

// ⋉ or ⊗ with the schemata applied to every derived inference A ⊨ i
// (i in span(A) \ A) of the factors instead of the stored rules.
Spanoid product_over_derived(ProductKind kind, const Spanoid& a, const Spanoid& b,
                             const Limits& limits = default_limits());

// rank(S1 ⋉ S2) = rank(S1)·rank(S2), with witness W1×W2 checked by span.
RankCertificate semidirect_rank(const ProductSpanoid& p, const Limits& limits = default_limits());
// Same, from certificates already known for the two factors.
RankCertificate semidirect_rank(const ProductSpanoid& p, const RankCertificate& left,
                                const RankCertificate& right);

}  // namespace spanoid
