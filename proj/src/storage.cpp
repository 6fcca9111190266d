#include "agmonoid/storage.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "agmonoid/canonical.hpp"
#include "agmonoid/properties.hpp"

namespace agmonoid {

std::string_view kind_tag(StructureKind kind) {
  return kind == StructureKind::commutative_monoid ? "cm" : "ag";
}

StructureKind kind_from_tag(std::string_view tag) {
  if (tag == "cm") return StructureKind::commutative_monoid;
  if (tag == "ag") return StructureKind::ag_monoid;
  throw std::invalid_argument("unknown kind tag: " + std::string(tag));
}

std::string encode_table(CayleyTable const& t) {
  if (t.order() > 9) {
    throw std::invalid_argument("encode_table: digit encoding requires order <= 9");
  }
  std::string line;
  line.reserve(t.entries().size());
  for (std::uint8_t e : t.entries()) {
    line.push_back(static_cast<char>('0' + e));
  }
  return line;
}

CayleyTable decode_table(std::string_view line, int n) {
  if (n < 1 || n > 9) {
    throw std::invalid_argument("decode_table: order must be between 1 and 9");
  }
  if (line.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("decode_table: expected " + std::to_string(n * n) +
                                " characters, got " + std::to_string(line.size()));
  }
  std::vector<std::uint8_t> entries;
  entries.reserve(line.size());
  for (char c : line) {
    if (c < '0' || c >= '0' + n) {
      throw std::invalid_argument(std::string("decode_table: character '") + c +
                                  "' out of range for order " + std::to_string(n));
    }
    entries.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return CayleyTable(n, std::move(entries));
}

void write_db(TableDatabase const& db, std::ostream& out) {
  out << "AGMON 1 n=" << db.order << " kind=" << kind_tag(db.kind)
      << " count=" << db.tables.size() << "\n";
  for (auto const& t : db.tables) {
    if (t.order() != db.order) {
      throw std::invalid_argument("write_db: table order differs from header");
    }
    out << encode_table(t) << "\n";
  }
}

void write_db(TableDatabase const& db, std::filesystem::path const& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps "\n" endings everywhere
  if (!out) {
    throw std::runtime_error("write_db: cannot open " + path.string());
  }
  write_db(db, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("write_db: write failed for " + path.string());
  }
}

namespace {

int parse_int_field(std::string_view token, std::string_view key, int line) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key) {
    throw ParseError(line, "malformed header: expected " + std::string(key) + "<value>");
  }
  std::string_view digits = token.substr(key.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) {
    throw ParseError(line, "malformed header: bad " + std::string(key) + " value");
  }
  return value;
}

}  // namespace

TableDatabase read_db(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(1, "missing header");
  }
  std::istringstream header(line);
  std::string magic, version, nfield, kindfield, countfield;
  if (!(header >> magic >> version >> nfield >> kindfield >> countfield) ||
      (header >> std::ws, !header.eof())) {
    throw ParseError(1, "malformed header: expected 'AGMON 1 n=<n> kind=<cm|ag> count=<k>'");
  }
  if (magic != "AGMON") throw ParseError(1, "malformed header: bad magic '" + magic + "'");
  if (version != "1") throw ParseError(1, "unsupported format version '" + version + "'");
  int n = parse_int_field(nfield, "n=", 1);
  if (n < 1 || n > 9) throw ParseError(1, "order out of range: " + std::to_string(n));
  if (kindfield.substr(0, 5) != "kind=") {
    throw ParseError(1, "malformed header: expected kind=<cm|ag>");
  }
  StructureKind kind;
  try {
    kind = kind_from_tag(kindfield.substr(5));
  } catch (std::invalid_argument const&) {
    throw ParseError(1, "malformed header: expected kind=<cm|ag>");
  }
  int count = parse_int_field(countfield, "count=", 1);

  TableDatabase db{n, kind, {}};
  db.tables.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError(i + 2, "table count mismatch: header says " + std::to_string(count) +
                                  ", file ends after " + std::to_string(i) + " tables");
    }
    try {
      db.tables.push_back(decode_table(line, n));
    } catch (std::invalid_argument const& e) {
      throw ParseError(i + 2, e.what());
    }
  }
  int extra_line = count + 2;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      throw ParseError(extra_line, "unexpected content after " + std::to_string(count) + " tables");
    }
    ++extra_line;
  }
  return db;
}

TableDatabase read_db(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_db: cannot open " + path.string());
  }
  return read_db(in);
}

Permutation parse_cycle_notation(std::string_view text, int n) {
  std::vector<std::uint8_t> images(n);
  for (int i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
  if (text == "()") return Permutation(std::move(images));
  if (text.empty()) throw std::invalid_argument("cycle notation: empty input");

  std::vector<bool> seen(n, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("cycle notation: expected '(' at position " +
                                  std::to_string(pos));
    }
    ++pos;
    std::vector<int> cycle;
    while (true) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) {
        throw std::invalid_argument("cycle notation: expected element at position " +
                                    std::to_string(pos));
      }
      int value = 0;
      std::from_chars(text.data() + start, text.data() + pos, value);
      if (value >= n) {
        throw std::invalid_argument("cycle notation: element " + std::to_string(value) +
                                    " out of range for degree " + std::to_string(n));
      }
      if (seen[value]) {
        throw std::invalid_argument("cycle notation: repeated element " + std::to_string(value));
      }
      seen[value] = true;
      cycle.push_back(value);
      if (pos >= text.size()) {
        throw std::invalid_argument("cycle notation: unterminated cycle");
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("cycle notation: unexpected character '" +
                                  std::string(1, text[pos]) + "' at position " +
                                  std::to_string(pos));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return Permutation(std::move(images));
}

std::string format_cycle_notation(Permutation const& p) {
  int n = p.degree();
  std::vector<bool> seen(n, false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || p(start) == start) continue;
    out.push_back('(');
    int x = start;
    bool first = true;
    do {
      if (!first) out.push_back(',');
      out += std::to_string(x);
      seen[x] = true;
      x = p(x);
      first = false;
    } while (x != start);
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

std::pair<CayleyTable, Permutation> relabel_identity_to_zero(CayleyTable const& t) {
  auto lids = left_identities(t);
  if (lids.empty()) {
    throw std::invalid_argument("relabel_identity_to_zero: no left identity");
  }
  if (lids.size() > 1) {
    throw std::invalid_argument("relabel_identity_to_zero: multiple left identities");
  }
  Permutation swap = Permutation::transposition(t.order(), 0, lids.front());
  return {apply_permutation(t, swap), swap};
}

}  // namespace agmonoid
