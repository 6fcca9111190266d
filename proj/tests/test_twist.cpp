#include <doctest.h>

#include <stdexcept>

#include "agmonoid/automorphism.hpp"
#include "agmonoid/canonical.hpp"
#include "agmonoid/enumerate.hpp"
#include "agmonoid/properties.hpp"
#include "agmonoid/reference.hpp"
#include "agmonoid/twist.hpp"
#include "fixtures.hpp"

using namespace agmonoid;
using namespace fixtures;

namespace {

// Every (monoid, alpha) pair with alpha^2 = 1 for the given order, including
// alpha = identity, built from the reference enumeration.
std::vector<TwistPair> all_twist_pairs(int n) {
  std::vector<TwistPair> pairs;
  for (auto const& m : reference::enumerate_commutative_monoids(n).tables) {
    AutomorphismGroup g = automorphism_group(m);
    for (auto const& p : g.members) {
      if (p.squares_to_identity()) pairs.push_back(TwistPair{m, p});
    }
  }
  return pairs;
}

}  // namespace

TEST_CASE("twist golden example") {
  CHECK(twist(TwistPair{example1(), alpha_15_24()}) == example2());
  CHECK(twist(TwistPair{example1(), Permutation::identity(6)}) == example1());

  CayleyTable twisted_c3 = twist(TwistPair{cyclic3(), Permutation::transposition(3, 1, 2)});
  CHECK(twisted_c3 == CayleyTable::from_rows({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
  CHECK(is_left_invertive(twisted_c3));
}

TEST_CASE("twist validates the pair and names the failed invariant") {
  CHECK_THROWS_WITH_AS(twist(TwistPair{example2(), Permutation::identity(6)}),
                       "twist pair: monoid is not commutative", std::invalid_argument);
  CHECK_THROWS_WITH_AS(twist(TwistPair{example1(), Permutation::transposition(6, 1, 2)}),
                       "twist pair: alpha is not an automorphism", std::invalid_argument);
  CHECK_THROWS_WITH_AS(twist(TwistPair{example1(), Permutation::identity(4)}),
                       "twist pair: alpha degree mismatch", std::invalid_argument);
  CHECK_THROWS_WITH_AS(twist(TwistPair{left_zero2(), Permutation::identity(2)}),
                       "twist pair: monoid is not commutative", std::invalid_argument);

  // x -> 2x on Z/5 is an automorphism of order 4, not an involution
  CayleyTable z5(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) z5.set(a, b, (a + b) % 5);
  }
  Permutation doubling({0, 2, 4, 1, 3});
  REQUIRE(is_homomorphic_image(z5, z5, doubling));
  CHECK_THROWS_WITH_AS(twist(TwistPair{z5, doubling}),
                       "twist pair: alpha squared is not the identity", std::invalid_argument);

  // commutative and associative but identity not at index 0
  CayleyTable shifted = apply_permutation(cyclic3(), Permutation::transposition(3, 0, 1));
  CHECK_THROWS_WITH_AS(twist(TwistPair{shifted, Permutation::identity(3)}),
                       "twist pair: monoid identity is not at index 0", std::invalid_argument);
}

TEST_CASE("untwist golden example") {
  TwistPair pair = untwist(example2());
  CHECK(pair.monoid == example1());
  CHECK(pair.alpha == alpha_15_24());
}

TEST_CASE("untwist of a commutative monoid gives alpha = identity") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& m : reference::enumerate_commutative_monoids(n).tables) {
      TwistPair pair = untwist(m);
      CHECK(pair.monoid == m);
      CHECK(pair.alpha.is_identity());
    }
  }
}

TEST_CASE("untwist rejects non-AG-monoids") {
  CHECK_THROWS_AS(untwist(left_zero2()), std::invalid_argument);
  // left identity elsewhere than 0
  CayleyTable shifted = apply_permutation(example2(), Permutation::transposition(6, 0, 1));
  CHECK_THROWS_AS(untwist(shifted), std::invalid_argument);
}

TEST_CASE("untwist∘twist and twist∘untwist are identities (order <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& pair : all_twist_pairs(n)) {
      CHECK(untwist(twist(pair)) == pair);
    }
    for (auto const& t : enumerate_ag_monoids_bruteforce(n).tables) {
      CHECK(twist(untwist(t)) == t);
    }
  }
}

TEST_CASE("twist output properties and the associativity chain (order <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& pair : all_twist_pairs(n)) {
      CayleyTable t = twist(pair);
      CHECK(is_left_invertive(t));
      CHECK(is_medial(t));
      CHECK(satisfies_paramedial_swap(t));
      CHECK(left_identities(t) == std::vector<int>{0});
      // associative ⟺ commutative ⟺ two-sided identity at 0 ⟺ alpha = 1
      bool assoc = is_associative(t);
      CHECK(assoc == is_commutative(t));
      CHECK(assoc == (two_sided_identity(t) == std::optional<int>(0)));
      CHECK(assoc == pair.alpha.is_identity());
      CHECK(assoc == untwist(t).alpha.is_identity());
    }
  }
}

TEST_CASE("ag_isomorphic_via_monoid") {
  TwistPair p1{example1(), Permutation::identity(6)};
  TwistPair p2{example1(), alpha_15_24()};
  CHECK(ag_isomorphic_via_monoid(p1, p1));
  CHECK(ag_isomorphic_via_monoid(p2, p2));
  CHECK_FALSE(ag_isomorphic_via_monoid(p1, p2));  // one twist associative, one not
  CHECK_FALSE(tables_isomorphic(twist(p1), twist(p2), 0));

  TwistPair q{cyclic3(), Permutation::identity(3)};
  CHECK_THROWS_AS(ag_isomorphic_via_monoid(p1, q), std::invalid_argument);
}

TEST_CASE("isomorphism criterion agrees with canonical forms and conjugacy (order <= 3)") {
  for (int n = 1; n <= 3; ++n) {
    auto pairs = all_twist_pairs(n);
    for (auto const& a : pairs) {
      for (auto const& b : pairs) {
        bool via_monoid = ag_isomorphic_via_monoid(a, b);
        CHECK(via_monoid == tables_isomorphic(twist(a), twist(b), 0));
        if (a.monoid == b.monoid) {
          AutomorphismGroup g = automorphism_group(a.monoid);
          CHECK(via_monoid == are_conjugate(g, a.alpha, b.alpha));
        }
      }
    }
  }
}

TEST_CASE("twists of one monoid are isomorphic iff the alphas are conjugate (order <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& m : enumerate_commutative_monoids(n).tables) {
      AutomorphismGroup g = automorphism_group(m);
      std::vector<Permutation> alphas;
      for (auto const& p : g.members) {
        if (p.squares_to_identity()) alphas.push_back(p);
      }
      for (auto const& a : alphas) {
        for (auto const& b : alphas) {
          CHECK(ag_isomorphic_via_monoid(TwistPair{m, a}, TwistPair{m, b}) ==
                are_conjugate(g, a, b));
        }
      }
    }
  }
}

TEST_CASE("count_ag_monoids_from_monoid") {
  CHECK(count_ag_monoids_from_monoid(trivial1()) == std::pair<int, int>{1, 0});
  CHECK(count_ag_monoids_from_monoid(cyclic3()) == std::pair<int, int>{1, 1});
  CHECK_THROWS_AS(count_ag_monoids_from_monoid(example2()), std::invalid_argument);
  CHECK_THROWS_AS(count_ag_monoids_from_monoid(left_zero2()), std::invalid_argument);

  // summed over the 78 commutative monoids of order 5 this yields the
  // order-5 count of non-associative AG-monoids
  auto monoids = enumerate_commutative_monoids(5);
  REQUIRE(monoids.count() == 78);
  int nonassoc = 0;
  for (auto const& m : monoids.tables) {
    auto [assoc, na] = count_ag_monoids_from_monoid(m);
    CHECK(assoc == 1);
    nonassoc += na;
  }
  CHECK(nonassoc == 29);
}

TEST_CASE("is_ag_monoid") {
  CHECK(is_ag_monoid(example2()));
  CHECK(is_ag_monoid(example1()));
  CHECK_FALSE(is_ag_monoid(left_zero2()));
}
