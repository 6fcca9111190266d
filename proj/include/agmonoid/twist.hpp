#ifndef AGMONOID_TWIST_HPP_
#define AGMONOID_TWIST_HPP_

#include <utility>

#include "agmonoid/cayley_table.hpp"
#include "agmonoid/permutation.hpp"

namespace agmonoid {

//! A commutative monoid (identity at 0) together with an automorphism alpha
//! squaring to the identity. Every AG-monoid decomposes into exactly one
//! such pair.
struct TwistPair {
  CayleyTable monoid;
  Permutation alpha;

  friend bool operator==(TwistPair const&, TwistPair const&) = default;
};

//! Throws invalid_argument naming the first violated TwistPair invariant.
void validate_twist_pair(TwistPair const& pair);

//! The derived product a·b = monoid(alpha(a), b). The result satisfies the
//! left invertive law and has left identity 0.
CayleyTable twist(TwistPair const& pair);

//! Recovers the unique pair behind an AG-monoid with left identity 0:
//! alpha(x) = t(x, 0) and monoid(x, y) = t(alpha(x), y).
TwistPair untwist(CayleyTable const& t);

//! True iff some permutation fixing 0 is a monoid isomorphism
//! p1.monoid -> p2.monoid with φ∘p1.alpha = p2.alpha∘φ; equivalent to the
//! twisted tables being isomorphic.
bool ag_isomorphic_via_monoid(TwistPair const& p1, TwistPair const& p2);

//! (1, number of conjugacy classes of nonidentity involutions in Aut(m)):
//! the associative twist plus one AG-monoid per class.
std::pair<int, int> count_ag_monoids_from_monoid(CayleyTable const& m);

//! Left invertive with at least one left identity.
bool is_ag_monoid(CayleyTable const& t);

}  // namespace agmonoid

#endif  // AGMONOID_TWIST_HPP_
