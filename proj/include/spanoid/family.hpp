#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spanoid/limits.hpp"
#include "spanoid/spanoid.hpp"
#include "spanoid/subset.hpp"

namespace spanoid {

// Subsets of [n] without repeats, kept sorted in integer order.
class SetFamily {
 public:
  SetFamily(std::size_t n, std::vector<Subset> members);

  std::size_t universe() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subset>& members() const { return members_; }
  bool contains(const Subset& s) const;

  // A pair whose intersection (union) is missing, if any.
  std::optional<std::pair<Subset, Subset>> intersection_gap() const;
  std::optional<std::pair<Subset, Subset>> union_gap() const;
  bool intersection_closed() const;  // also requires [n]
  bool union_closed() const;         // also requires the empty set

  SetFamily complements() const;
  // Inclusion-minimal members other than the empty set.
  SetFamily minimal_nonempty() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t n_;
  std::vector<Subset> members_;
};

SetFamily closed_sets(const Spanoid& sp, const Limits& limits = default_limits());
SetFamily open_sets(const Spanoid& sp, const Limits& limits = default_limits());
// Read off the generating family when the spanoid carries one, else enumerated.
SetFamily minimal_open_sets(const Spanoid& sp, const Limits& limits = default_limits());
// Nonempty opens that are not unions of strictly smaller opens.
SetFamily irreducible_open_sets(const Spanoid& sp, const Limits& limits = default_limits());

// Validates intersection closure and membership of [n].
Spanoid from_closed_family(const SetFamily& fam, const Limits& limits = default_limits());

// A ⊨ i iff S_i ⊆ ∪_{j∈A} S_j, sets drawn from a universe of size u.
Spanoid from_union_family(std::size_t u, const std::vector<Subset>& sets,
                          const Limits& limits = default_limits());

struct SetRepresentation {
  enum class Flavor { intersection, union_ };
  std::size_t universe = 0;
  std::vector<Subset> sets;
  Flavor flavor = Flavor::intersection;

  SetRepresentation complemented() const;
};

// Intersection flavor over the closed sets: S_i = {closed sets containing i}.
SetRepresentation set_representation(const Spanoid& sp, const Limits& limits = default_limits());
Spanoid spanoid_of(const SetRepresentation& rep, const Limits& limits = default_limits());
// Smallest number of sets whose intersection equals the intersection of all.
std::size_t intersection_dimension(const SetRepresentation& rep);

}  // namespace spanoid
