#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "agmonoid/automorphism.hpp"
#include "agmonoid/canonical.hpp"
#include "agmonoid/reference.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace agmonoid;
using namespace fixtures;

TEST_CASE("automorphism_group of the worked 6-element monoid") {
  AutomorphismGroup g = automorphism_group(example1());
  // frozen from the exhaustive oracle: the Klein four-group on {(2,4),(1,5)}
  CHECK(g.members.size() == 4);
  CHECK(g.contains(alpha_15_24()));
  CHECK(g.contains(Permutation::identity(6)));
  CHECK(g.members == oracles::automorphisms_by_enumeration(example1()));
}

TEST_CASE("automorphism_group small cases") {
  CHECK(automorphism_group(trivial1()).members ==
        std::vector<Permutation>{Permutation::identity(1)});

  AutomorphismGroup c3 = automorphism_group(cyclic3());
  CHECK(c3.members == std::vector<Permutation>{Permutation::identity(3),
                                               Permutation::transposition(3, 1, 2)});
}

TEST_CASE("automorphism_group requires an identity at 0") {
  CHECK_THROWS_AS(automorphism_group(left_zero2()), std::invalid_argument);
  // identity exists but sits at index 1
  CayleyTable shifted = apply_permutation(cyclic3(), Permutation::transposition(3, 0, 1));
  CHECK_THROWS_AS(automorphism_group(shifted), std::invalid_argument);
  // a unique left identity at 0 is accepted (AG-monoid case)
  CHECK(automorphism_group(example2()).members.size() >= 1);
}

TEST_CASE("backtracking search matches the exhaustive oracle on all small monoids") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& m : reference::enumerate_commutative_monoids(n).tables) {
      CHECK(automorphism_group(m).members == oracles::automorphisms_by_enumeration(m));
    }
  }
}

TEST_CASE("group invariants: sorted, closed, identity-fixing, Lagrange") {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (auto const& t : {example1(), cyclic3(), example2()}) {
    AutomorphismGroup g = automorphism_group(t);
    CHECK(std::is_sorted(g.members.begin(), g.members.end()));
    CHECK(factorial(t.order() - 1) % static_cast<long long>(g.members.size()) == 0);
    for (auto const& p : g.members) {
      CHECK(p(0) == 0);
      CHECK(is_homomorphic_image(t, t, p));
      CHECK(g.contains(p.inverse()));
      for (auto const& q : g.members) {
        CHECK(g.contains(p * q));
      }
    }
  }
}

TEST_CASE("involutions") {
  auto invs = involutions(automorphism_group(example1()));
  CHECK(invs.size() == 3);  // (2,4), (1,5), (1,5)(2,4)
  CHECK(std::find(invs.begin(), invs.end(), alpha_15_24()) != invs.end());
  CHECK(std::is_sorted(invs.begin(), invs.end()));

  CHECK(involutions(automorphism_group(trivial1())).empty());
  CHECK(involutions(automorphism_group(cyclic3())) ==
        std::vector<Permutation>{Permutation::transposition(3, 1, 2)});
}

TEST_CASE("conjugacy classes of involutions") {
  CHECK(conjugacy_classes_of_involutions(automorphism_group(trivial1())).classes.empty());

  InvolutionClasses c3 = conjugacy_classes_of_involutions(automorphism_group(cyclic3()));
  REQUIRE(c3.classes.size() == 1);
  CHECK(c3.representatives() == std::vector<Permutation>{Permutation::transposition(3, 1, 2)});

  // Aut(example1) is abelian of order 4, so each involution is its own class
  AutomorphismGroup g = automorphism_group(example1());
  InvolutionClasses ex1 = conjugacy_classes_of_involutions(g);
  CHECK(ex1.classes.size() == 3);
  bool found = false;
  for (auto const& cls : ex1.classes) {
    found = found || std::find(cls.begin(), cls.end(), alpha_15_24()) != cls.end();
  }
  CHECK(found);
}

TEST_CASE("classes partition the involutions and are closed under conjugation") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& m : reference::enumerate_commutative_monoids(n).tables) {
      AutomorphismGroup g = automorphism_group(m);
      auto invs = involutions(g);
      InvolutionClasses classes = conjugacy_classes_of_involutions(g);

      std::vector<Permutation> flattened;
      for (auto const& cls : classes.classes) {
        CHECK(std::is_sorted(cls.begin(), cls.end()));
        for (auto const& q : cls) {
          CHECK(q.is_involution());
          flattened.push_back(q);
          for (auto const& p : g.members) {
            Permutation conj = p * q * p.inverse();
            CHECK(conj.is_involution());
            CHECK(std::find(cls.begin(), cls.end(), conj) != cls.end());
          }
        }
      }
      std::sort(flattened.begin(), flattened.end());
      auto dup = std::unique(flattened.begin(), flattened.end());
      CHECK(dup == flattened.end());  // pairwise disjoint
      CHECK(flattened == invs);       // union is the involution set
    }
  }
}

TEST_CASE("are_conjugate") {
  AutomorphismGroup g = automorphism_group(cyclic3());
  Permutation id3 = Permutation::identity(3);
  Permutation swap12 = Permutation::transposition(3, 1, 2);
  CHECK(are_conjugate(g, swap12, swap12));
  CHECK(are_conjugate(g, id3, id3));
  CHECK_FALSE(are_conjugate(g, id3, swap12));  // conjugation preserves order
  CHECK_THROWS_AS(are_conjugate(g, Permutation({0, 2, 1}), Permutation({1, 0, 2})),
                  std::invalid_argument);

  AutomorphismGroup ex1 = automorphism_group(example1());
  for (auto const& cls : conjugacy_classes_of_involutions(ex1).classes) {
    for (auto const& a : cls) {
      for (auto const& b : cls) {
        CHECK(are_conjugate(ex1, a, b));
      }
    }
  }
}
