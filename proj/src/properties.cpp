#include "agmonoid/properties.hpp"

namespace agmonoid {

std::optional<std::array<int, 3>> find_associativity_violation(CayleyTable const& t) {
  int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        if (t.at(ab, c) != t.at(a, t.at(b, c))) {
          return std::array<int, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 2>> find_commutativity_violation(CayleyTable const& t) {
  int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (t.at(a, b) != t.at(b, a)) {
        return std::array<int, 2>{a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_left_invertive_violation(CayleyTable const& t) {
  int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = t.at(x, y);
      for (int z = 0; z < n; ++z) {
        if (t.at(xy, z) != t.at(t.at(z, y), x)) {
          return std::array<int, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_medial_violation(CayleyTable const& t) {
  int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        int ac = t.at(a, c);
        for (int d = 0; d < n; ++d) {
          if (t.at(ab, t.at(c, d)) != t.at(ac, t.at(b, d))) {
            return std::array<int, 4>{a, b, c, d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_paramedial_swap_violation(CayleyTable const& t) {
  int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t.at(a, t.at(b, c)) != t.at(b, t.at(a, c))) {
          return std::array<int, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<int> left_identities(CayleyTable const& t) {
  int n = t.order();
  std::vector<int> result;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      if (t.at(e, x) != x) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(e);
  }
  return result;
}

std::optional<int> two_sided_identity(CayleyTable const& t) {
  int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      if (t.at(e, x) != x || t.at(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) return e;  // at most one two-sided identity can exist
  }
  return std::nullopt;
}

}  // namespace agmonoid
