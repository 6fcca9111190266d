#ifndef AGMONOID_REFERENCE_HPP_
#define AGMONOID_REFERENCE_HPP_

#include "agmonoid/enumerate.hpp"

namespace agmonoid::reference {

// Serial generate-and-test enumerators kept as correctness oracles for the
// parallel kernels: no incremental pruning, the defining predicates are
// evaluated on every completed table, and canonicity goes through the
// generic canonical_form. Only usable at small orders.

EnumerationResult enumerate_commutative_monoids(int n);

EnumerationResult enumerate_ag_monoids_bruteforce(int n);

}  // namespace agmonoid::reference

#endif  // AGMONOID_REFERENCE_HPP_
