#include "agmonoid/automorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "agmonoid/properties.hpp"

namespace agmonoid {

namespace detail {

namespace {

struct IsoSearch {
  CayleyTable const& t1;
  CayleyTable const& t2;
  Permutation const* alpha1;
  Permutation const* alpha2;
  std::function<bool(Permutation const&)> const& emit;
  int n;
  std::vector<std::uint8_t> image;
  std::vector<bool> used;
  bool stopped = false;

  // Images are assigned in index order, so 0..a is exactly the assigned set.
  bool consistent(int a) {
    for (int x = 0; x <= a; ++x) {
      for (int y = 0; y <= a; ++y) {
        int c = t1.at(x, y);
        if (x != a && y != a && c != a) continue;  // pair checked earlier
        int w = t2.at(image[x], image[y]);
        if (c <= a) {
          if (w != image[c]) return false;
        } else if (used[w]) {
          return false;  // image[c] must still be available
        }
      }
    }
    if (alpha1 != nullptr) {
      for (int x = 0; x <= a; ++x) {
        int ax = (*alpha1)(x);
        if (ax > a || (x != a && ax != a)) continue;
        if (image[ax] != (*alpha2)(image[x])) return false;
      }
    }
    return true;
  }

  void run(int a) {
    if (stopped) return;
    if (a == n) {
      if (!emit(Permutation(image))) stopped = true;
      return;
    }
    for (int v = 1; v < n; ++v) {
      if (used[v]) continue;
      image[a] = static_cast<std::uint8_t>(v);
      used[v] = true;
      if (consistent(a)) run(a + 1);
      used[v] = false;
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_isomorphism(CayleyTable const& t1, CayleyTable const& t2,
                          Permutation const* alpha1, Permutation const* alpha2,
                          std::function<bool(Permutation const&)> const& emit) {
  int n = t1.order();
  if (t2.order() != n) {
    throw std::invalid_argument("for_each_isomorphism: size mismatch");
  }
  if (alpha1 != nullptr && (alpha1->degree() != n || alpha2 == nullptr || alpha2->degree() != n)) {
    throw std::invalid_argument("for_each_isomorphism: alpha degree mismatch");
  }
  IsoSearch search{t1, t2, alpha1, alpha2, emit, n,
                   std::vector<std::uint8_t>(n, 0), std::vector<bool>(n, false)};
  search.used[0] = true;
  if (!search.consistent(0)) return;  // checks pairs over {0} alone
  search.run(1);
}

}  // namespace detail

bool AutomorphismGroup::contains(Permutation const& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

AutomorphismGroup automorphism_group(CayleyTable const& t) {
  bool ok = two_sided_identity(t) == std::optional<int>(0);
  if (!ok) {
    auto lids = left_identities(t);
    ok = lids.size() == 1 && lids.front() == 0;
  }
  if (!ok) {
    throw std::invalid_argument("automorphism_group: no identity at index 0");
  }
  std::vector<Permutation> members;
  detail::for_each_isomorphism(t, t, nullptr, nullptr, [&](Permutation const& p) {
    members.push_back(p);
    return true;
  });
  // emitted in lexicographic order already; keep the invariant explicit
  std::sort(members.begin(), members.end());
  return AutomorphismGroup{t, std::move(members)};
}

std::vector<Permutation> involutions(AutomorphismGroup const& g) {
  std::vector<Permutation> result;
  for (auto const& p : g.members) {
    if (p.is_involution()) result.push_back(p);
  }
  return result;
}

InvolutionClasses conjugacy_classes_of_involutions(AutomorphismGroup const& g) {
  std::vector<Permutation> invs = involutions(g);
  InvolutionClasses result;
  std::vector<bool> classified(invs.size(), false);
  for (std::size_t i = 0; i < invs.size(); ++i) {
    if (classified[i]) continue;
    std::vector<Permutation> orbit;
    for (auto const& p : g.members) {
      Permutation conj = p * invs[i] * p.inverse();
      auto it = std::lower_bound(invs.begin(), invs.end(), conj);
      if (it == invs.end() || *it != conj) {
        throw std::logic_error("conjugacy_classes_of_involutions: group not closed");
      }
      std::size_t idx = static_cast<std::size_t>(it - invs.begin());
      if (!classified[idx]) {
        classified[idx] = true;
        orbit.push_back(conj);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.classes.push_back(std::move(orbit));
  }
  return result;
}

bool are_conjugate(AutomorphismGroup const& g, Permutation const& a, Permutation const& b) {
  if (!g.contains(a) || !g.contains(b)) {
    throw std::invalid_argument("are_conjugate: permutation is not a group member");
  }
  for (auto const& p : g.members) {
    if (p * a * p.inverse() == b) return true;
  }
  return false;
}

}  // namespace agmonoid
