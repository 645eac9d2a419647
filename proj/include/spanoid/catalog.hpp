#pragma once

#include <cstddef>
#include <string>

#include "spanoid/family.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

// Π5: the two ends of each pentagon edge span the opposite vertex.
Spanoid pentagon();
// Union representation of Π5 over the five vertex bits: S_i = {i-1, i+1} (mod 5).
SetRepresentation pentagon_union_representation();
// The four-element spanoid with closed sets ∅, {1}, {4}, {2,4}, {3,4}, [4].
Spanoid xu_spanoid();
SetFamily xu_closed_sets();
Spanoid free_spanoid(std::size_t n);
// Every r-subset spans [n].
Spanoid uniform_matroid(std::size_t r, std::size_t n);

// Looks up "pentagon", "xu", "free:<n>" or "uniform:<r>:<n>".
Spanoid named_spanoid(const std::string& name);

}  // namespace spanoid
