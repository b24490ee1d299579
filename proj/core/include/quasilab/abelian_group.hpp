#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasilab/limits.hpp"
#include "quasilab/permutation.hpp"
#include "quasilab/quasigroup.hpp"

namespace quasilab {

// A finite abelian group on {0..n-1} given by its addition table. The
// constructor verifies the group axioms.
class AbelianGroup {
 public:
  // Throws Error(kNotAbelianGroup) naming the first failing axiom instance.
  AbelianGroup(int order, std::vector<Element> add, Element zero,
               std::optional<std::vector<int>> factors = std::nullopt);

  int order() const noexcept { return order_; }
  Element zero() const noexcept { return zero_; }

  Element add(Element a, Element b) const noexcept {
    return add_[static_cast<std::size_t>(a * order_ + b)];
  }
  Element neg(Element a) const noexcept { return neg_[static_cast<std::size_t>(a)]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  // a + a + ... (k times); k >= 0.
  Element multiple(Element a, int k) const noexcept;
  int element_order(Element a) const noexcept;

  // y -> a + y.
  Permutation translation(Element a) const;
  // The map a -> -a.
  Permutation negation() const { return Permutation(neg_); }

  std::span<const Element> table() const noexcept { return add_; }
  Quasigroup as_quasigroup() const;

  // Cyclic orders when built structurally, e.g. {4, 2} for Z4xZ2.
  const std::optional<std::vector<int>>& factors() const noexcept { return factors_; }
  // "Z4xZ2", or "G<n>" when the structure is unknown.
  std::string name() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.order_ == b.order_ && a.zero_ == b.zero_ && a.add_ == b.add_;
  }

 private:
  int order_;
  std::vector<Element> add_;
  Element zero_;
  std::vector<Element> neg_;
  std::optional<std::vector<int>> factors_;
};

AbelianGroup Cyclic(int n);

// Mixed-radix encoding with the first factor most significant:
// (a1, ..., ak) -> ((a1 * n2 + a2) * n3 + a3) ...
AbelianGroup DirectProduct(const std::vector<AbelianGroup>& groups);

// Parses "Z4", "Z2xZ2", "z3XZ9". Throws kBadGroupSpec.
AbelianGroup GroupFromSpec(std::string_view spec);

// One representative per isomorphism class, as products of cyclic groups of
// prime-power order. Primes ascend; for each prime the exponent partitions are
// visited largest-part-first (Z8, Z4xZ2, Z2xZ2xZ2). Throws kOrderTooLarge.
std::vector<AbelianGroup> EnumerateAbelianGroups(int n, const Limits& limits = {});

// All automorphisms, sorted by image sequence. Throws kOrderTooLarge.
std::vector<Permutation> AutomorphismGroup(const AbelianGroup& g,
                                           const Limits& limits = {});

bool IsAutomorphism(const AbelianGroup& g, const Permutation& theta);

// x*y = x - y.
Quasigroup SubtractionQuasigroup(const AbelianGroup& g);

// Rebuilds the abelian group hidden in a quasigroup of the form x*y = x - y:
// with e the right unit, x + y := x*(e*y). Throws kNoRightUnit,
// kNotAbelianGroup or kRepresentationMismatch.
AbelianGroup RecoverGroup(const Quasigroup& q);

// {a : a + a = 0}, sorted.
std::vector<Element> TwoTorsion(const AbelianGroup& g);

// x o y = x*(y*x).
Magma CoreGroupoid(const Quasigroup& q);

}  // namespace quasilab
