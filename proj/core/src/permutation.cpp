#include "quasilab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quasilab/error.hpp"

namespace quasilab {

Permutation::Permutation(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  const auto n = static_cast<Element>(image_.size());
  for (Element v : image_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kNotPermutation,
                  "image " + ToString() + " is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::Identity(int degree) {
  std::vector<Element> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(Unchecked{}, std::move(image));
}

Element Permutation::at(Element x) const {
  if (x < 0 || x >= degree()) {
    throw Error(ErrorCode::kOutOfRange, "element " + std::to_string(x) +
                                            " outside degree " +
                                            std::to_string(degree()));
  }
  return (*this)(x);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Element>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i])] = static_cast<Element>(i);
  }
  return Permutation(Unchecked{}, std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.degree() != degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "cannot compose permutations of degree " +
                                                std::to_string(degree()) + " and " +
                                                std::to_string(other.degree()));
  }
  std::vector<Element> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    out[i] = image_[static_cast<std::size_t>(other.image_[i])];
  }
  return Permutation(Unchecked{}, std::move(out));
}

std::string Permutation::ToString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) os << ',';
    os << image_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.ToString();
}

std::vector<Element> Orbit(std::span<const Permutation> generators, Element start) {
  if (generators.empty()) return {start};
  const int n = generators.front().degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Element> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Permutation& g : generators) {
      const Element next = g(queue[head]);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace quasilab
