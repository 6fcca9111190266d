#ifndef AGMONOID_TESTS_FIXTURES_HPP_
#define AGMONOID_TESTS_FIXTURES_HPP_

#include "agmonoid/cayley_table.hpp"
#include "agmonoid/permutation.hpp"

namespace fixtures {

// 6-element commutative monoid with Aut = {(), (2,4), (1,5), (1,5)(2,4)}.
inline agmonoid::CayleyTable example1() {
  return agmonoid::CayleyTable::from_rows({{0, 1, 2, 3, 4, 5},
                                           {1, 5, 2, 3, 4, 0},
                                           {2, 2, 2, 3, 3, 2},
                                           {3, 3, 3, 3, 3, 3},
                                           {4, 4, 3, 3, 4, 4},
                                           {5, 0, 2, 3, 4, 1}});
}

// The twist of example1 by (1,5)(2,4): a non-associative AG-monoid.
inline agmonoid::CayleyTable example2() {
  return agmonoid::CayleyTable::from_rows({{0, 1, 2, 3, 4, 5},
                                           {5, 0, 2, 3, 4, 1},
                                           {4, 4, 3, 3, 4, 4},
                                           {3, 3, 3, 3, 3, 3},
                                           {2, 2, 2, 3, 3, 2},
                                           {1, 5, 2, 3, 4, 0}});
}

inline constexpr char kExample1Line[] = "012345152340222332333333443344502341";
inline constexpr char kExample2Line[] = "012345502341443344333333222332152340";

inline agmonoid::Permutation alpha_15_24() {
  return agmonoid::Permutation({0, 5, 4, 3, 2, 1});
}

inline agmonoid::CayleyTable cyclic3() {
  return agmonoid::CayleyTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

inline agmonoid::CayleyTable left_zero2() {
  return agmonoid::CayleyTable::from_rows({{0, 0}, {1, 1}});
}

inline agmonoid::CayleyTable trivial1() {
  return agmonoid::CayleyTable::from_rows({{0}});
}

}  // namespace fixtures

#endif
