#ifndef AGMONOID_STORAGE_HPP_
#define AGMONOID_STORAGE_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agmonoid/cayley_table.hpp"
#include "agmonoid/permutation.hpp"

namespace agmonoid {

//! Error in an AGMON file, carrying the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

//! Ordered collection of same-order tables with the file header fields.
struct TableDatabase {
  int order;
  StructureKind kind;
  std::vector<CayleyTable> tables;

  friend bool operator==(TableDatabase const&, TableDatabase const&) = default;
};

//! "cm" / "ag" tags used in AGMON headers.
std::string_view kind_tag(StructureKind kind);
StructureKind kind_from_tag(std::string_view tag);  // throws invalid_argument

//! Row-major digits, one character per entry. Requires order <= 9.
std::string encode_table(CayleyTable const& t);

//! Inverse of encode_table for a known order.
CayleyTable decode_table(std::string_view line, int n);

// AGMON text format: "AGMON 1 n=<n> kind=<cm|ag> count=<k>" followed by one
// encoded table per line, ASCII with "\n" endings, byte-identical across
// runs and platforms.
void write_db(TableDatabase const& db, std::ostream& out);
void write_db(TableDatabase const& db, std::filesystem::path const& path);
TableDatabase read_db(std::istream& in);
TableDatabase read_db(std::filesystem::path const& path);

//! Parses disjoint cycles like "(1,5)(2,4)"; "()" is the identity.
Permutation parse_cycle_notation(std::string_view text, int n);

//! Cycles sorted by least element, each starting at its least element,
//! fixed points omitted; the identity prints as "()".
std::string format_cycle_notation(Permutation const& p);

//! Swaps the unique left identity of t to index 0. Returns the relabeled
//! table and the transposition used (identity when already at 0).
std::pair<CayleyTable, Permutation> relabel_identity_to_zero(CayleyTable const& t);

}  // namespace agmonoid

#endif  // AGMONOID_STORAGE_HPP_
