#include "agmonoid/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace agmonoid {

CayleyTable apply_permutation(CayleyTable const& t, Permutation const& p) {
  int n = t.order();
  if (p.degree() != n) {
    throw std::invalid_argument("apply_permutation: degree mismatch");
  }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[static_cast<std::size_t>(p(a)) * n + p(b)] = static_cast<std::uint8_t>(p(t.at(a, b)));
    }
  }
  return CayleyTable(n, std::move(out));
}

bool is_homomorphic_image(CayleyTable const& t, CayleyTable const& t2, Permutation const& p) {
  int n = t.order();
  if (t2.order() != n || p.degree() != n) {
    throw std::invalid_argument("is_homomorphic_image: size mismatch");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p(t.at(a, b)) != t2.at(p(a), p(b))) return false;
    }
  }
  return true;
}

namespace {

// Walks every permutation q fixing `fixed` (ascending image order) and hands
// (q, p = q^{-1}) to fn; stops when fn returns false. Relabeled entry (i, j)
// of the table is p[t(q[i], q[j])].
template <typename Fn>
void for_each_relabeling(int n, int fixed, Fn&& fn) {
  std::vector<std::uint8_t> vals;
  vals.reserve(n - 1);
  for (int v = 0; v < n; ++v) {
    if (v != fixed) vals.push_back(static_cast<std::uint8_t>(v));
  }
  std::vector<std::uint8_t> q(n), p(n);
  do {
    q[fixed] = static_cast<std::uint8_t>(fixed);
    for (int i = 0, k = 0; i < n; ++i) {
      if (i != fixed) q[i] = vals[k++];
    }
    for (int i = 0; i < n; ++i) p[q[i]] = static_cast<std::uint8_t>(i);
    if (!fn(q.data(), p.data())) return;
  } while (std::next_permutation(vals.begin(), vals.end()));
}

}  // namespace

CayleyTable canonical_form(CayleyTable const& t, int fixed) {
  int n = t.order();
  if (fixed < 0 || fixed >= n) {
    throw std::invalid_argument("canonical_form: fixed index out of range");
  }
  std::uint8_t const* src = t.data();
  std::vector<std::uint8_t> best(t.entries());
  for_each_relabeling(n, fixed, [&](std::uint8_t const* q, std::uint8_t const* p) {
    // Prefix compare against the best so far; abandon on the first entry
    // exceeding it, take over as the new best on the first entry below it.
    for (int i = 0; i < n; ++i) {
      std::uint8_t const* row = src + static_cast<std::size_t>(q[i]) * n;
      for (int j = 0; j < n; ++j) {
        std::uint8_t v = p[row[q[j]]];
        std::uint8_t c = best[static_cast<std::size_t>(i) * n + j];
        if (v == c) continue;
        if (v > c) return true;  // next permutation
        best[static_cast<std::size_t>(i) * n + j] = v;
        for (std::size_t idx = static_cast<std::size_t>(i) * n + j + 1; idx < best.size(); ++idx) {
          best[idx] = p[src[static_cast<std::size_t>(q[idx / n]) * n + q[idx % n]]];
        }
        return true;
      }
    }
    return true;
  });
  return CayleyTable(n, std::move(best));
}

bool is_canonical_form(CayleyTable const& t, int fixed) {
  int n = t.order();
  if (fixed < 0 || fixed >= n) {
    throw std::invalid_argument("is_canonical_form: fixed index out of range");
  }
  std::uint8_t const* src = t.data();
  bool canonical = true;
  for_each_relabeling(n, fixed, [&](std::uint8_t const* q, std::uint8_t const* p) {
    for (int i = 0; i < n; ++i) {
      std::uint8_t const* row = src + static_cast<std::size_t>(q[i]) * n;
      for (int j = 0; j < n; ++j) {
        std::uint8_t v = p[row[q[j]]];
        std::uint8_t c = src[static_cast<std::size_t>(i) * n + j];
        if (v == c) continue;
        if (v < c) {
          canonical = false;
          return false;  // found a smaller relabeling, stop
        }
        return true;  // this relabeling is larger, next one
      }
    }
    return true;  // equal: q is an automorphism
  });
  return canonical;
}

bool tables_isomorphic(CayleyTable const& t1, CayleyTable const& t2, int fixed) {
  if (t1.order() != t2.order()) {
    throw std::invalid_argument("tables_isomorphic: size mismatch");
  }
  return canonical_form(t1, fixed) == canonical_form(t2, fixed);
}

namespace detail {

bool is_canonical_table(std::uint8_t const* t, int n, std::uint8_t* scratch) {
  // Same test as is_canonical_form with fixed = 0, on a raw buffer whose
  // row 0 is the identity row (so row 0 of every relabeling matches and the
  // comparison starts at row 1).
  std::uint8_t* q = scratch;
  std::uint8_t* p = scratch + n;
  std::uint8_t* vals = scratch + 2 * n;
  for (int v = 1; v < n; ++v) vals[v - 1] = static_cast<std::uint8_t>(v);
  q[0] = 0;
  do {
    for (int i = 1; i < n; ++i) q[i] = vals[i - 1];
    for (int i = 0; i < n; ++i) p[q[i]] = static_cast<std::uint8_t>(i);
    for (int i = 1; i < n; ++i) {
      std::uint8_t const* row = t + static_cast<std::size_t>(q[i]) * n;
      std::uint8_t const* orig = t + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) {
        std::uint8_t v = p[row[q[j]]];
        if (v == orig[j]) continue;
        if (v < orig[j]) return false;
        goto next_perm;
      }
    }
  next_perm:;
  } while (std::next_permutation(vals, vals + (n - 1)));
  return true;
}

}  // namespace detail

}  // namespace agmonoid
