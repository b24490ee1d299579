#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace quasilab {

// Elements of a carrier of order n are always 0..n-1.
using Element = int;

// A bijection of {0..n-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;

  // Validates that `image` is a bijection (kNotPermutation otherwise).
  explicit Permutation(std::vector<Element> image);

  static Permutation Identity(int degree);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  Element operator()(Element x) const { return image_[static_cast<std::size_t>(x)]; }
  Element at(Element x) const;
  std::span<const Element> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // (this * other)(x) == this(other(x)); `other` acts first.
  Permutation operator*(const Permutation& other) const;

  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Element> image) : image_(std::move(image)) {}

  std::vector<Element> image_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Orbit of `start` under the group generated by `generators` (all of the same
// degree), returned sorted.
std::vector<Element> Orbit(std::span<const Permutation> generators, Element start);

}  // namespace quasilab
