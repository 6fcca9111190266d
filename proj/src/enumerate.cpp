#include "agmonoid/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agmonoid/automorphism.hpp"
#include "agmonoid/canonical.hpp"
#include "agmonoid/twist.hpp"

namespace agmonoid {

namespace {

constexpr int kMaxOrder = 9;
constexpr std::uint8_t kUnset = 0xFF;

using Buf = std::array<std::uint8_t, kMaxOrder * kMaxOrder>;
using Cell = std::pair<int, int>;

int resolve_workers(int workers) {
  if (workers > 0) return workers;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void check_order_range(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("enumeration order must be between 1 and 9");
  }
}

// Shared progress counters; the callback fires roughly every kInterval nodes.
struct ProgressSink {
  static constexpr std::uint64_t kInterval = std::uint64_t(1) << 22;

  ProgressFn fn;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> found{0};
  std::atomic<std::uint64_t> next{kInterval};
  std::mutex mutex;

  void add_nodes(std::uint64_t k) {
    if (!fn) return;
    std::uint64_t total = nodes.fetch_add(k, std::memory_order_relaxed) + k;
    if (total < next.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(mutex);
    if (total < next.load(std::memory_order_relaxed)) return;  // already reported past us
    next.store((total / kInterval + 1) * kInterval, std::memory_order_relaxed);
    fn(ProgressInfo{total, found.load(std::memory_order_relaxed)});
  }

  void add_found() {
    if (fn) found.fetch_add(1, std::memory_order_relaxed);
  }
};

// ---------------------------------------------------------------------------
// Law kernels. Each law presets the fixed identity cells, lists the free
// cells in lexicographic order, and checks after every assignment exactly
// the identity-law triples that just became fully evaluable.

// Commutative + associative with two-sided identity at 0: row 0 and column 0
// are preset, the free cells are the upper triangle (a <= b), and every
// assignment mirrors across the diagonal.
struct CommutativeAssocLaw {
  static void preset(std::uint8_t* t, int n) {
    std::fill(t, t + n * n, kUnset);
    for (int x = 0; x < n; ++x) {
      t[x] = static_cast<std::uint8_t>(x);
      t[x * n] = static_cast<std::uint8_t>(x);
    }
  }

  static std::vector<Cell> cells(int n) {
    std::vector<Cell> cs;
    for (int a = 1; a < n; ++a) {
      for (int b = a; b < n; ++b) cs.emplace_back(a, b);
    }
    return cs;
  }

  static void set(std::uint8_t* t, int n, Cell c, std::uint8_t v) {
    t[c.first * n + c.second] = v;
    t[c.second * n + c.first] = v;
  }

  static void unset(std::uint8_t* t, int n, Cell c) {
    t[c.first * n + c.second] = kUnset;
    t[c.second * n + c.first] = kUnset;
  }

  // (xy)z == x(yz) whenever all four products are assigned.
  static bool triple_ok(std::uint8_t const* t, int n, int x, int y, int z) {
    std::uint8_t xy = t[x * n + y];
    if (xy == kUnset) return true;
    std::uint8_t yz = t[y * n + z];
    if (yz == kUnset) return true;
    std::uint8_t l = t[xy * n + z];
    if (l == kUnset) return true;
    std::uint8_t r = t[x * n + yz];
    return r == kUnset || l == r;
  }

  static bool consistent(std::uint8_t const* t, int n, Cell c) {
    int const pts[2][2] = {{c.first, c.second}, {c.second, c.first}};
    int variants = c.first == c.second ? 1 : 2;
    for (int k = 0; k < variants; ++k) {
      int r = pts[k][0], s = pts[k][1];
      for (int z = 0; z < n; ++z) {
        if (!triple_ok(t, n, r, s, z)) return false;  // (x,y) is the new cell
        if (!triple_ok(t, n, z, r, s)) return false;  // (y,z) is the new cell
      }
      // the new cell is the outer product (xy)z or x(yz)
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          std::uint8_t v = t[x * n + y];
          if (v == r && !triple_ok(t, n, x, y, s)) return false;
          if (v == s && !triple_ok(t, n, r, x, y)) return false;
        }
      }
    }
    return true;
  }
};

// Left invertive law with left identity at 0: row 0 is preset to the
// identity, all remaining cells are free.
struct LeftInvertiveLaw {
  static void preset(std::uint8_t* t, int n) {
    std::fill(t, t + n * n, kUnset);
    for (int x = 0; x < n; ++x) t[x] = static_cast<std::uint8_t>(x);
  }

  static std::vector<Cell> cells(int n) {
    std::vector<Cell> cs;
    for (int a = 1; a < n; ++a) {
      for (int b = 0; b < n; ++b) cs.emplace_back(a, b);
    }
    return cs;
  }

  static void set(std::uint8_t* t, int n, Cell c, std::uint8_t v) {
    t[c.first * n + c.second] = v;
  }

  static void unset(std::uint8_t* t, int n, Cell c) {
    t[c.first * n + c.second] = kUnset;
  }

  // (xy)z == (zy)x whenever all four products are assigned.
  static bool triple_ok(std::uint8_t const* t, int n, int x, int y, int z) {
    std::uint8_t xy = t[x * n + y];
    if (xy == kUnset) return true;
    std::uint8_t zy = t[z * n + y];
    if (zy == kUnset) return true;
    std::uint8_t l = t[xy * n + z];
    if (l == kUnset) return true;
    std::uint8_t r = t[zy * n + x];
    return r == kUnset || l == r;
  }

  static bool consistent(std::uint8_t const* t, int n, Cell c) {
    int r = c.first, s = c.second;
    for (int z = 0; z < n; ++z) {
      if (!triple_ok(t, n, r, s, z)) return false;  // (x,y) is the new cell
      if (!triple_ok(t, n, z, s, r)) return false;  // (z,y) is the new cell
    }
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w) {
        if (t[u * n + w] != r) continue;
        if (!triple_ok(t, n, u, w, s)) return false;  // t(x,y) = r, z = s
        if (!triple_ok(t, n, s, w, u)) return false;  // t(z,y) = r, x = s
      }
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Search-tree partitioning: expand assignments level by level until the
// frontier is comfortably larger than the worker pool, then give each prefix
// to a worker and merge deterministically.

struct Partial {
  Buf buf;
  int depth;
};

template <typename Law>
std::vector<Partial> expand_prefixes(int n, std::vector<Cell> const& cells,
                                     std::size_t min_count) {
  std::vector<Partial> frontier(1);
  frontier[0].depth = 0;
  Law::preset(frontier[0].buf.data(), n);
  while (frontier.size() < min_count && !frontier.empty() &&
         frontier[0].depth < static_cast<int>(cells.size())) {
    std::vector<Partial> next;
    next.reserve(frontier.size() * n);
    for (auto const& part : frontier) {
      Cell c = cells[part.depth];
      for (int v = 0; v < n; ++v) {
        Partial ext = part;
        Law::set(ext.buf.data(), n, c, static_cast<std::uint8_t>(v));
        if (Law::consistent(ext.buf.data(), n, c)) {
          ext.depth = part.depth + 1;
          next.push_back(ext);
        }
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

template <typename Law>
struct Dfs {
  int n;
  std::vector<Cell> const& cells;
  ProgressSink& sink;
  std::vector<std::vector<std::uint8_t>>& out;
  Buf buf{};
  std::array<std::uint8_t, 3 * kMaxOrder> scratch{};
  std::uint64_t local_nodes = 0;

  void flush_nodes() {
    sink.add_nodes(local_nodes);
    local_nodes = 0;
  }

  void run(int depth) {
    if (depth == static_cast<int>(cells.size())) {
      if (detail::is_canonical_table(buf.data(), n, scratch.data())) {
        out.emplace_back(buf.data(), buf.data() + n * n);
        sink.add_found();
      }
      return;
    }
    Cell c = cells[depth];
    for (int v = 0; v < n; ++v) {
      Law::set(buf.data(), n, c, static_cast<std::uint8_t>(v));
      if (++local_nodes >= 65536) flush_nodes();
      if (Law::consistent(buf.data(), n, c)) run(depth + 1);
    }
    Law::unset(buf.data(), n, c);
  }
};

template <typename Law>
EnumerationResult run_enumeration(int n, StructureKind kind, EnumerationOptions const& opts) {
  check_order_range(n);
  int workers = resolve_workers(opts.workers);
  std::vector<Cell> cells = Law::cells(n);
  std::vector<Partial> prefixes =
      expand_prefixes<Law>(n, cells, static_cast<std::size_t>(workers) * 8);

  ProgressSink sink;
  sink.fn = opts.progress;
  std::vector<std::vector<std::vector<std::uint8_t>>> per_prefix(prefixes.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    Dfs<Law> dfs{n, cells, sink, per_prefix[i]};
    dfs.buf = prefixes[i].buf;
    dfs.run(prefixes[i].depth);
    dfs.flush_nodes();
  }

  std::vector<std::vector<std::uint8_t>> raw;
  for (auto& chunk : per_prefix) {
    for (auto& t : chunk) raw.push_back(std::move(t));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  EnumerationResult result{n, kind, {}};
  result.tables.reserve(raw.size());
  for (auto& t : raw) result.tables.emplace_back(n, std::move(t));
  return result;
}

}  // namespace

EnumerationResult enumerate_commutative_monoids(int n, EnumerationOptions const& opts) {
  return run_enumeration<CommutativeAssocLaw>(n, StructureKind::commutative_monoid, opts);
}

EnumerationResult enumerate_ag_monoids_bruteforce(int n, EnumerationOptions const& opts) {
  return run_enumeration<LeftInvertiveLaw>(n, StructureKind::ag_monoid, opts);
}

EnumerationResult enumerate_ag_monoids_via_construction(int n, bool include_associative,
                                                        EnumerationOptions const& opts) {
  check_order_range(n);
  EnumerationResult monoids = enumerate_commutative_monoids(n, opts);
  int workers = resolve_workers(opts.workers);
  std::vector<std::vector<CayleyTable>> per_monoid(monoids.tables.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
  for (std::size_t i = 0; i < monoids.tables.size(); ++i) {
    CayleyTable const& m = monoids.tables[i];
    if (include_associative) per_monoid[i].push_back(m);  // the alpha = 1 twist
    auto classes = conjugacy_classes_of_involutions(automorphism_group(m));
    for (auto const& rep : classes.representatives()) {
      per_monoid[i].push_back(canonical_form(twist(TwistPair{m, rep}), 0));
    }
  }

  EnumerationResult result{n, StructureKind::ag_monoid, {}};
  for (auto& chunk : per_monoid) {
    for (auto& t : chunk) result.tables.push_back(std::move(t));
  }
  std::sort(result.tables.begin(), result.tables.end());
  result.tables.erase(std::unique(result.tables.begin(), result.tables.end()),
                      result.tables.end());
  return result;
}

Table1Row table1_row(int n, EnumerationOptions const& opts) {
  check_order_range(n);
  EnumerationResult monoids = enumerate_commutative_monoids(n, opts);
  int workers = resolve_workers(opts.workers);
  long long nonassoc = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers) reduction(+ : nonassoc)
#endif
  for (std::size_t i = 0; i < monoids.tables.size(); ++i) {
    nonassoc += count_ag_monoids_from_monoid(monoids.tables[i]).second;
  }

  int cm = static_cast<int>(monoids.count());
  return Table1Row{cm, static_cast<int>(nonassoc), cm + static_cast<int>(nonassoc)};
}

}  // namespace agmonoid
