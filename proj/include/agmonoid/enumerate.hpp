#ifndef AGMONOID_ENUMERATE_HPP_
#define AGMONOID_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "agmonoid/cayley_table.hpp"

namespace agmonoid {

//! Canonical, sorted, pairwise non-isomorphic tables of one order and kind.
struct EnumerationResult {
  int order;
  StructureKind kind;
  std::vector<CayleyTable> tables;

  std::size_t count() const noexcept { return tables.size(); }
};

struct ProgressInfo {
  std::uint64_t nodes_visited;
  std::uint64_t tables_found;
};

//! Periodic progress callback. Invocations are serialized but may come from
//! any worker thread.
using ProgressFn = std::function<void(ProgressInfo const&)>;

struct EnumerationOptions {
  int workers = 0;  // 0 = all hardware threads
  ProgressFn progress;
};

//! All commutative monoids of order n up to isomorphism, identity at 0,
//! each in canonical form. 1 <= n <= 9.
EnumerationResult enumerate_commutative_monoids(int n, EnumerationOptions const& opts = {});

//! AG-monoids of order n built as twists: one per conjugacy class of
//! involutions of each commutative monoid, plus the alpha = 1 twist when
//! include_associative is set.
EnumerationResult enumerate_ag_monoids_via_construction(int n, bool include_associative,
                                                        EnumerationOptions const& opts = {});

//! Independent oracle: direct backtracking over table cells for tables with
//! left identity 0 satisfying the left invertive law, up to identity-fixing
//! isomorphism. No use of the twist construction. Fast for n <= 5.
EnumerationResult enumerate_ag_monoids_bruteforce(int n, EnumerationOptions const& opts = {});

struct Table1Row {
  int commutative_monoids;
  int nonassociative_ag;
  int total;

  friend bool operator==(Table1Row const&, Table1Row const&) = default;
};

//! Classification counts for order n via the construction pipeline;
//! total = commutative_monoids + nonassociative_ag.
Table1Row table1_row(int n, EnumerationOptions const& opts = {});

}  // namespace agmonoid

#endif  // AGMONOID_ENUMERATE_HPP_
