#include "agmonoid/reference.hpp"

#include <algorithm>
#include <stdexcept>

#include "agmonoid/canonical.hpp"
#include "agmonoid/properties.hpp"

namespace agmonoid::reference {

namespace {

void check_order(int n) {
  if (n < 1 || n > 9) {
    throw std::invalid_argument("enumeration order must be between 1 and 9");
  }
}

template <typename Keep>
void fill_cells(CayleyTable& t, std::vector<std::pair<int, int>> const& cells,
                std::size_t depth, bool mirror, Keep const& keep) {
  if (depth == cells.size()) {
    keep(t);
    return;
  }
  auto [a, b] = cells[depth];
  for (int v = 0; v < t.order(); ++v) {
    t.set(a, b, v);
    if (mirror) t.set(b, a, v);
    fill_cells(t, cells, depth + 1, mirror, keep);
  }
}

EnumerationResult collect(int n, StructureKind kind, std::vector<CayleyTable>&& found) {
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return EnumerationResult{n, kind, std::move(found)};
}

}  // namespace

EnumerationResult enumerate_commutative_monoids(int n) {
  check_order(n);
  CayleyTable t(n);
  for (int x = 0; x < n; ++x) {
    t.set(0, x, x);
    t.set(x, 0, x);
  }
  std::vector<std::pair<int, int>> cells;
  for (int a = 1; a < n; ++a) {
    for (int b = a; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<CayleyTable> found;
  fill_cells(t, cells, 0, true, [&](CayleyTable const& full) {
    if (is_associative(full) && is_commutative(full) &&
        two_sided_identity(full) == std::optional<int>(0) &&
        full == canonical_form(full, 0)) {
      found.push_back(full);
    }
  });
  return collect(n, StructureKind::commutative_monoid, std::move(found));
}

EnumerationResult enumerate_ag_monoids_bruteforce(int n) {
  check_order(n);
  CayleyTable t(n);
  for (int x = 0; x < n; ++x) t.set(0, x, x);
  std::vector<std::pair<int, int>> cells;
  for (int a = 1; a < n; ++a) {
    for (int b = 0; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<CayleyTable> found;
  fill_cells(t, cells, 0, false, [&](CayleyTable const& full) {
    if (is_left_invertive(full) && full == canonical_form(full, 0)) {
      found.push_back(full);
    }
  });
  return collect(n, StructureKind::ag_monoid, std::move(found));
}

}  // namespace agmonoid::reference
