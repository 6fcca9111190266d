#include "agmonoid/twist.hpp"

#include <stdexcept>

#include "agmonoid/automorphism.hpp"
#include "agmonoid/canonical.hpp"
#include "agmonoid/properties.hpp"

namespace agmonoid {

void validate_twist_pair(TwistPair const& pair) {
  if (!is_commutative(pair.monoid)) {
    throw std::invalid_argument("twist pair: monoid is not commutative");
  }
  if (!is_associative(pair.monoid)) {
    throw std::invalid_argument("twist pair: monoid is not associative");
  }
  if (two_sided_identity(pair.monoid) != std::optional<int>(0)) {
    throw std::invalid_argument("twist pair: monoid identity is not at index 0");
  }
  if (pair.alpha.degree() != pair.monoid.order()) {
    throw std::invalid_argument("twist pair: alpha degree mismatch");
  }
  if (!is_homomorphic_image(pair.monoid, pair.monoid, pair.alpha)) {
    throw std::invalid_argument("twist pair: alpha is not an automorphism");
  }
  if (!pair.alpha.squares_to_identity()) {
    throw std::invalid_argument("twist pair: alpha squared is not the identity");
  }
}

CayleyTable twist(TwistPair const& pair) {
  validate_twist_pair(pair);
  int n = pair.monoid.order();
  CayleyTable out(n);
  for (int a = 0; a < n; ++a) {
    int aa = pair.alpha(a);
    for (int b = 0; b < n; ++b) {
      out.set(a, b, pair.monoid.at(aa, b));
    }
  }
  return out;
}

TwistPair untwist(CayleyTable const& t) {
  if (!is_left_invertive(t)) {
    throw std::invalid_argument("untwist: not an AG-monoid (table is not left invertive)");
  }
  auto lids = left_identities(t);
  if (lids.size() != 1 || lids.front() != 0) {
    throw std::invalid_argument(
        "untwist: not an AG-monoid with left identity 0 (left identity missing or elsewhere)");
  }
  int n = t.order();
  std::vector<std::uint8_t> images(n);
  for (int x = 0; x < n; ++x) {
    images[x] = static_cast<std::uint8_t>(t.at(x, 0));
  }
  Permutation alpha{std::move(images)};  // alpha(x) = x·0
  CayleyTable monoid(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      monoid.set(x, y, t.at(alpha(x), y));  // x+y = alpha(x)·y
    }
  }
  return TwistPair{std::move(monoid), std::move(alpha)};
}

bool ag_isomorphic_via_monoid(TwistPair const& p1, TwistPair const& p2) {
  validate_twist_pair(p1);
  validate_twist_pair(p2);
  if (p1.monoid.order() != p2.monoid.order()) {
    throw std::invalid_argument("ag_isomorphic_via_monoid: order mismatch");
  }
  bool found = false;
  detail::for_each_isomorphism(p1.monoid, p2.monoid, &p1.alpha, &p2.alpha,
                               [&](Permutation const&) {
                                 found = true;
                                 return false;
                               });
  return found;
}

std::pair<int, int> count_ag_monoids_from_monoid(CayleyTable const& m) {
  if (!is_commutative(m) || !is_associative(m) ||
      two_sided_identity(m) != std::optional<int>(0)) {
    throw std::invalid_argument(
        "count_ag_monoids_from_monoid: not a commutative monoid with identity 0");
  }
  auto classes = conjugacy_classes_of_involutions(automorphism_group(m));
  return {1, static_cast<int>(classes.classes.size())};
}

bool is_ag_monoid(CayleyTable const& t) {
  return is_left_invertive(t) && !left_identities(t).empty();
}

}  // namespace agmonoid
