#ifndef AGMONOID_CANONICAL_HPP_
#define AGMONOID_CANONICAL_HPP_

#include <cstdint>

#include "agmonoid/cayley_table.hpp"
#include "agmonoid/permutation.hpp"

namespace agmonoid {

//! Relabel t by p: the result t' satisfies t'(p(a), p(b)) = p(t(a, b)).
CayleyTable apply_permutation(CayleyTable const& t, Permutation const& p);

//! True iff p(t(a,b)) = t2(p(a), p(b)) for all a, b.
bool is_homomorphic_image(CayleyTable const& t, CayleyTable const& t2, Permutation const& p);

//! Lexicographically least (row-major) relabeling of t over all permutations
//! fixing `fixed`. Two tables sharing the fixed identity index are isomorphic
//! iff their canonical forms coincide.
CayleyTable canonical_form(CayleyTable const& t, int fixed);

//! t == canonical_form(t, fixed), without materializing the form.
bool is_canonical_form(CayleyTable const& t, int fixed);

//! Equal canonical forms under relabelings fixing `fixed`.
bool tables_isomorphic(CayleyTable const& t1, CayleyTable const& t2, int fixed);

namespace detail {

// Raw minlex kernel used at enumeration leaves. t is a row-major n x n buffer
// whose row 0 is the identity row; tests identity-fixed canonicity with
// per-permutation early abort. scratch must hold 3*n bytes.
bool is_canonical_table(std::uint8_t const* t, int n, std::uint8_t* scratch);

}  // namespace detail

}  // namespace agmonoid

#endif  // AGMONOID_CANONICAL_HPP_
