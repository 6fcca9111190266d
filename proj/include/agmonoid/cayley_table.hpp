#ifndef AGMONOID_CAYLEY_TABLE_HPP_
#define AGMONOID_CAYLEY_TABLE_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace agmonoid {

//! Kind tag for enumerated structure databases.
enum class StructureKind { commutative_monoid, ag_monoid };

//! Full multiplication table of a finite binary operation on {0,..,n-1}.
//! Row index is the left operand. Immutable in spirit: treat instances as
//! values; all library operations return fresh tables.
class CayleyTable {
 public:
  //! Order-n table with every entry 0.
  explicit CayleyTable(int order) : order_(check_order(order)) {
    entries_.assign(static_cast<std::size_t>(order_) * order_, 0);
  }

  //! Row-major entries; must have length order^2 with values < order.
  CayleyTable(int order, std::vector<std::uint8_t> entries)
      : order_(check_order(order)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(order_) * order_) {
      throw std::invalid_argument("CayleyTable: entries length != order^2");
    }
    for (std::uint8_t e : entries_) {
      if (e >= order_) {
        throw std::invalid_argument("CayleyTable: entry out of range");
      }
    }
  }

  static CayleyTable from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    int n = static_cast<int>(rows.size());
    std::vector<std::uint8_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (auto const& row : rows) {
      if (static_cast<int>(row.size()) != n) {
        throw std::invalid_argument("CayleyTable: ragged rows");
      }
      for (int v : row) {
        if (v < 0 || v >= n) {
          throw std::invalid_argument("CayleyTable: entry out of range");
        }
        flat.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return CayleyTable(n, std::move(flat));
  }

  int order() const noexcept { return order_; }

  //! Product of a and b (a is the left operand).
  int at(int a, int b) const {
    return entries_[static_cast<std::size_t>(a) * order_ + b];
  }

  void set(int a, int b, int v) {
    if (v < 0 || v >= order_) {
      throw std::invalid_argument("CayleyTable: entry out of range");
    }
    entries_[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint8_t>(v);
  }

  //! Row-major flattened entries.
  std::vector<std::uint8_t> const& entries() const noexcept { return entries_; }
  std::uint8_t const* data() const noexcept { return entries_.data(); }

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

  //! Lexicographic on (order, row-major entries); the order used everywhere
  //! for sorting enumeration output.
  friend std::strong_ordering operator<=>(CayleyTable const& a, CayleyTable const& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  static int check_order(int order) {
    if (order < 1) throw std::invalid_argument("CayleyTable: order must be >= 1");
    if (order > 255) throw std::invalid_argument("CayleyTable: order too large");
    return order;
  }

  int order_;
  std::vector<std::uint8_t> entries_;
};

}  // namespace agmonoid

#endif  // AGMONOID_CAYLEY_TABLE_HPP_
