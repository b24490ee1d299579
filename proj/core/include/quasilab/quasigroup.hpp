#pragma once

#include <array>
#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasilab/permutation.hpp"

namespace quasilab {

enum class Side { kLeft, kRight };

// A finite quasigroup given by its Cayley table (a Latin square). The cell at
// row x, column y holds x*y. Left and right division tables are built on the
// first division query and shared between copies.
class Quasigroup {
 public:
  // Validates shape, symbol range and the Latin property.
  // Throws kNotSquare, kBadSymbol or NotLatinError.
  static Quasigroup FromRows(const std::vector<std::vector<int>>& rows,
                             std::optional<std::string> label = std::nullopt);
  static Quasigroup FromCells(int order, std::vector<Element> cells,
                              std::optional<std::string> label = std::nullopt);

  int order() const noexcept { return order_; }

  // Checked access (kOutOfRange).
  Element mul(Element x, Element y) const;
  // x \ y: the unique z with x*z == y.
  Element ldiv(Element x, Element y) const;
  // x / y: the unique z with z*y == x. Note the argument order.
  Element rdiv(Element x, Element y) const;

  // Unchecked product, for inner loops.
  Element operator()(Element x, Element y) const noexcept {
    return cells_[static_cast<std::size_t>(x * order_ + y)];
  }
  Element ldiv_unchecked(Element x, Element y) const noexcept {
    return divisions().left[static_cast<std::size_t>(x * order_ + y)];
  }
  Element rdiv_unchecked(Element x, Element y) const noexcept {
    return divisions().right[static_cast<std::size_t>(x * order_ + y)];
  }

  // Left: y -> a*y. Right: x -> x*a.
  Permutation translation(Side side, Element a) const;

  std::span<const Element> cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  const std::optional<std::string>& label() const noexcept { return label_; }
  Quasigroup with_label(std::string label) const;

  // Equality and ordering consider the table only.
  friend bool operator==(const Quasigroup& a, const Quasigroup& b) {
    return a.cells_ == b.cells_;
  }
  friend std::strong_ordering operator<=>(const Quasigroup& a,
                                          const Quasigroup& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  struct Divisions {
    std::vector<Element> left;
    std::vector<Element> right;
  };
  struct DivisionCache {
    std::once_flag once;
    Divisions tables;
  };

  Quasigroup(int order, std::vector<Element> cells,
             std::optional<std::string> label);
  const Divisions& divisions() const;
  void check_element(Element x) const;

  int order_ = 0;
  std::vector<Element> cells_;
  std::optional<std::string> label_;
  std::shared_ptr<DivisionCache> cache_;
};

// A binary operation on {0..n-1} that need not be Latin (e.g. a core).
struct Magma {
  int order = 0;
  std::vector<Element> cells;

  Element operator()(Element x, Element y) const noexcept {
    return cells[static_cast<std::size_t>(x * order + y)];
  }
  bool is_latin() const;
  friend bool operator==(const Magma&, const Magma&) = default;
};

// A permutation of the three slots of the relation x1*x2 = x3. The parastrophe
// for `slots` = {s1, s2, s3} (0-based) is the operation o with
// t[s1] o t[s2] = t[s3] for every triple t = (x1, x2, x1*x2).
class ParastropheSelector {
 public:
  constexpr ParastropheSelector() = default;
  // Throws kNotPermutation unless `slots` is a permutation of {0,1,2}.
  explicit ParastropheSelector(std::array<int, 3> slots);

  static ParastropheSelector Identity() { return {}; }
  // a o b = c iff c*b = a.
  static ParastropheSelector Swap13() { return ParastropheSelector({2, 1, 0}); }
  static ParastropheSelector Swap12() { return ParastropheSelector({1, 0, 2}); }
  static ParastropheSelector Swap23() { return ParastropheSelector({0, 2, 1}); }
  static std::array<ParastropheSelector, 6> All();

  const std::array<int, 3>& slots() const noexcept { return slots_; }
  std::string ToString() const;

  // Selector equivalent to taking the `first` parastrophe, then the `then`
  // parastrophe of the result.
  friend ParastropheSelector Then(const ParastropheSelector& first,
                                  const ParastropheSelector& then);

  friend bool operator==(const ParastropheSelector&,
                         const ParastropheSelector&) = default;

 private:
  std::array<int, 3> slots_{0, 1, 2};
};

Quasigroup Parastrophe(const Quasigroup& q, const ParastropheSelector& sel);

// The operation o with gamma(x o y) = alpha(x) * beta(y).
// Throws kDegreeMismatch if a permutation has the wrong degree.
Quasigroup Isotope(const Quasigroup& q, const Permutation& alpha,
                   const Permutation& beta, const Permutation& gamma);

// The isomorphic copy of q obtained by renaming every element x to phi(x).
Quasigroup Relabel(const Quasigroup& q, const Permutation& phi);

struct UnitInfo {
  std::optional<Element> left_unit;
  std::optional<Element> right_unit;
  bool is_loop = false;
  bool is_unipotent = false;
  bool is_commutative = false;
  bool is_associative = false;
};

UnitInfo UnitPredicates(const Quasigroup& q);

// Standard tables used throughout tests and examples.
Quasigroup CyclicAdditionTable(int n);
Quasigroup CyclicSubtractionTable(int n);

}  // namespace quasilab
