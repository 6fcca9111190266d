#ifndef AGMONOID_PROPERTIES_HPP_
#define AGMONOID_PROPERTIES_HPP_

#include <array>
#include <optional>
#include <vector>

#include "agmonoid/cayley_table.hpp"

namespace agmonoid {

// Identity-law predicates. Each find_* scans tuples in lexicographic order
// and stops at the first violation; the returned tuple is the witness.

//! First (a,b,c) with (ab)c != a(bc), if any.
std::optional<std::array<int, 3>> find_associativity_violation(CayleyTable const& t);

//! First (a,b) with ab != ba, if any.
std::optional<std::array<int, 2>> find_commutativity_violation(CayleyTable const& t);

//! First (x,y,z) with (xy)z != (zy)x, if any.
std::optional<std::array<int, 3>> find_left_invertive_violation(CayleyTable const& t);

//! First (a,b,c,d) with (ab)(cd) != (ac)(bd), if any.
std::optional<std::array<int, 4>> find_medial_violation(CayleyTable const& t);

//! First (a,b,c) with a(bc) != b(ac), if any.
std::optional<std::array<int, 3>> find_paramedial_swap_violation(CayleyTable const& t);

inline bool is_associative(CayleyTable const& t) {
  return !find_associativity_violation(t).has_value();
}

inline bool is_commutative(CayleyTable const& t) {
  return !find_commutativity_violation(t).has_value();
}

inline bool is_left_invertive(CayleyTable const& t) {
  return !find_left_invertive_violation(t).has_value();
}

inline bool is_medial(CayleyTable const& t) {
  return !find_medial_violation(t).has_value();
}

inline bool satisfies_paramedial_swap(CayleyTable const& t) {
  return !find_paramedial_swap_violation(t).has_value();
}

//! All e with ex = x for every x, in increasing order.
std::vector<int> left_identities(CayleyTable const& t);

//! The unique e whose row and column are both the identity map, if any.
std::optional<int> two_sided_identity(CayleyTable const& t);

}  // namespace agmonoid

#endif  // AGMONOID_PROPERTIES_HPP_
