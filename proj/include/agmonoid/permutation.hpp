#ifndef AGMONOID_PERMUTATION_HPP_
#define AGMONOID_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace agmonoid {

//! Bijection on {0,..,n-1}, stored as the image sequence.
class Permutation {
 public:
  //! images[i] is the image of i; must be a bijection.
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint8_t v : images_) {
      if (v >= images_.size() || seen[v]) {
        throw std::invalid_argument("Permutation: images are not a bijection");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<std::uint8_t> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  //! Transposition of a and b (identity when a == b).
  static Permutation transposition(int degree, int a, int b) {
    Permutation p = identity(degree);
    if (a < 0 || b < 0 || a >= degree || b >= degree) {
      throw std::invalid_argument("Permutation: transposition point out of range");
    }
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  int operator()(int i) const { return images_[i]; }

  std::vector<std::uint8_t> const& images() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<std::uint8_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  //! True iff p∘p is the identity (includes the identity itself).
  bool squares_to_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[images_[i]] != i) return false;
    }
    return true;
  }

  //! Nonidentity self-inverse permutation.
  bool is_involution() const { return !is_identity() && squares_to_identity(); }

  friend bool operator==(Permutation const&, Permutation const&) = default;

  //! Lexicographic on (degree, image sequence).
  friend std::strong_ordering operator<=>(Permutation const& a, Permutation const& b) {
    if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint8_t> images_;
};

//! (p * q)(x) = p(q(x)): apply q first.
inline Permutation operator*(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  }
  std::vector<std::uint8_t> im(p.degree());
  for (int x = 0; x < p.degree(); ++x) {
    im[x] = static_cast<std::uint8_t>(p(q(x)));
  }
  return Permutation(std::move(im));
}

}  // namespace agmonoid

#endif  // AGMONOID_PERMUTATION_HPP_
