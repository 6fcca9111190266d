#ifndef AGMONOID_AUTOMORPHISM_HPP_
#define AGMONOID_AUTOMORPHISM_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "agmonoid/cayley_table.hpp"
#include "agmonoid/permutation.hpp"

namespace agmonoid {

//! Explicit listing of every automorphism of a table, each fixing element 0.
//! Members are sorted lexicographically by image sequence; the identity is
//! always present and the list is closed under composition and inversion.
struct AutomorphismGroup {
  CayleyTable base;
  std::vector<Permutation> members;

  bool contains(Permutation const& p) const;
};

//! Conjugacy classes of the nonidentity involutions of a group. Classes are
//! sorted internally and ordered by their lexicographically least member.
struct InvolutionClasses {
  std::vector<std::vector<Permutation>> classes;

  std::vector<Permutation> representatives() const {
    std::vector<Permutation> reps;
    reps.reserve(classes.size());
    for (auto const& cls : classes) reps.push_back(cls.front());
    return reps;
  }
};

//! All p with p(0) = 0 and p(t(a,b)) = t(p(a), p(b)). Requires a two-sided
//! identity at 0 or a unique left identity at 0; throws otherwise.
AutomorphismGroup automorphism_group(CayleyTable const& t);

//! Nonidentity members squaring to the identity, in lexicographic order.
std::vector<Permutation> involutions(AutomorphismGroup const& g);

//! Partition of involutions(g) into orbits under conjugation by g.
InvolutionClasses conjugacy_classes_of_involutions(AutomorphismGroup const& g);

//! True iff p∘a∘p⁻¹ = b for some p in g. Both a and b must be members.
bool are_conjugate(AutomorphismGroup const& g, Permutation const& a, Permutation const& b);

namespace detail {

// Backtracking search over bijections p with p(0) = 0 mapping t1 onto t2
// (p(t1(a,b)) = t2(p(a), p(b))). When alpha1/alpha2 are given, additionally
// requires p∘alpha1 = alpha2∘p. Emits every solution in lexicographic image
// order; stops when emit returns false.
void for_each_isomorphism(CayleyTable const& t1, CayleyTable const& t2,
                          Permutation const* alpha1, Permutation const* alpha2,
                          std::function<bool(Permutation const&)> const& emit);

}  // namespace detail

}  // namespace agmonoid

#endif  // AGMONOID_AUTOMORPHISM_HPP_
