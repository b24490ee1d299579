#include "quasilab/quasigroup.hpp"

#include <algorithm>

#include "quasilab/error.hpp"
#include "quasilab/limits.hpp"

namespace quasilab {
namespace {

void ValidateLatin(int n, const std::vector<Element>& cells) {
  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int y = 0; y < n; ++y) {
      const Element v = cells[static_cast<std::size_t>(x * n + y)];
      if (seen[static_cast<std::size_t>(v)]) throw NotLatinError(true, x, y, v);
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      const Element v = cells[static_cast<std::size_t>(x * n + y)];
      if (seen[static_cast<std::size_t>(v)]) throw NotLatinError(false, x, y, v);
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

}  // namespace

Quasigroup::Quasigroup(int order, std::vector<Element> cells,
                       std::optional<std::string> label)
    : order_(order),
      cells_(std::move(cells)),
      label_(std::move(label)),
      cache_(std::make_shared<DivisionCache>()) {}

Quasigroup Quasigroup::FromRows(const std::vector<std::vector<int>>& rows,
                                std::optional<std::string> label) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::kNotSquare, "table has no rows");
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto& row = rows[static_cast<std::size_t>(x)];
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kNotSquare,
                  "row " + std::to_string(x) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n));
    }
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return FromCells(n, std::move(cells), std::move(label));
}

Quasigroup Quasigroup::FromCells(int order, std::vector<Element> cells,
                                 std::optional<std::string> label) {
  if (order <= 0) throw Error(ErrorCode::kNotSquare, "order must be positive");
  if (order > kMaxTableOrder) {
    throw Error(ErrorCode::kOrderTooLarge,
                "order " + std::to_string(order) + " exceeds supported maximum " +
                    std::to_string(kMaxTableOrder));
  }
  if (cells.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw Error(ErrorCode::kNotSquare, "expected " + std::to_string(order * order) +
                                           " cells, got " + std::to_string(cells.size()));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] < 0 || cells[i] >= order) {
      throw Error(ErrorCode::kBadSymbol,
                  "entry " + std::to_string(cells[i]) + " at (" +
                      std::to_string(i / static_cast<std::size_t>(order)) + ", " +
                      std::to_string(i % static_cast<std::size_t>(order)) +
                      ") outside 0.." + std::to_string(order - 1));
    }
  }
  ValidateLatin(order, cells);
  return Quasigroup(order, std::move(cells), std::move(label));
}

void Quasigroup::check_element(Element x) const {
  if (x < 0 || x >= order_) {
    throw Error(ErrorCode::kOutOfRange, "element " + std::to_string(x) +
                                            " outside 0.." + std::to_string(order_ - 1));
  }
}

Element Quasigroup::mul(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return (*this)(x, y);
}

Element Quasigroup::ldiv(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return ldiv_unchecked(x, y);
}

Element Quasigroup::rdiv(Element x, Element y) const {
  check_element(x);
  check_element(y);
  return rdiv_unchecked(x, y);
}

const Quasigroup::Divisions& Quasigroup::divisions() const {
  std::call_once(cache_->once, [this] {
    const auto n = static_cast<std::size_t>(order_);
    Divisions d;
    d.left.resize(n * n);
    d.right.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto z = static_cast<std::size_t>(cells_[x * n + y]);
        d.left[x * n + z] = static_cast<Element>(y);   // x \ z = y
        d.right[z * n + y] = static_cast<Element>(x);  // z / y = x
      }
    }
    cache_->tables = std::move(d);
  });
  return cache_->tables;
}

Permutation Quasigroup::translation(Side side, Element a) const {
  check_element(a);
  std::vector<Element> image(static_cast<std::size_t>(order_));
  for (int v = 0; v < order_; ++v) {
    image[static_cast<std::size_t>(v)] = side == Side::kLeft ? (*this)(a, v) : (*this)(v, a);
  }
  return Permutation(std::move(image));
}

std::vector<std::vector<int>> Quasigroup::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int x = 0; x < order_; ++x) {
    auto begin = cells_.begin() + x * order_;
    out[static_cast<std::size_t>(x)].assign(begin, begin + order_);
  }
  return out;
}

Quasigroup Quasigroup::with_label(std::string label) const {
  Quasigroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

bool Magma::is_latin() const {
  try {
    ValidateLatin(order, cells);
  } catch (const NotLatinError&) {
    return false;
  }
  return true;
}

ParastropheSelector::ParastropheSelector(std::array<int, 3> slots) : slots_(slots) {
  std::array<bool, 3> seen{};
  for (int s : slots_) {
    if (s < 0 || s > 2 || seen[static_cast<std::size_t>(s)]) {
      throw Error(ErrorCode::kNotPermutation, "parastrophe selector " + ToString() +
                                                  " is not a permutation of slots");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
}

std::array<ParastropheSelector, 6> ParastropheSelector::All() {
  return {ParastropheSelector({0, 1, 2}), ParastropheSelector({0, 2, 1}),
          ParastropheSelector({1, 0, 2}), ParastropheSelector({1, 2, 0}),
          ParastropheSelector({2, 0, 1}), ParastropheSelector({2, 1, 0})};
}

std::string ParastropheSelector::ToString() const {
  return "(" + std::to_string(slots_[0] + 1) + std::to_string(slots_[1] + 1) +
         std::to_string(slots_[2] + 1) + ")";
}

ParastropheSelector Then(const ParastropheSelector& first,
                         const ParastropheSelector& then) {
  std::array<int, 3> slots{};
  for (std::size_t i = 0; i < 3; ++i) {
    slots[i] = first.slots_[static_cast<std::size_t>(then.slots_[i])];
  }
  return ParastropheSelector(slots);
}

Quasigroup Parastrophe(const Quasigroup& q, const ParastropheSelector& sel) {
  const int n = q.order();
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  const auto& s = sel.slots();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::array<Element, 3> t{x, y, q(x, y)};
      cells[static_cast<std::size_t>(t[static_cast<std::size_t>(s[0])] * n +
                                     t[static_cast<std::size_t>(s[1])])] =
          t[static_cast<std::size_t>(s[2])];
    }
  }
  return Quasigroup::FromCells(n, std::move(cells));
}

Quasigroup Isotope(const Quasigroup& q, const Permutation& alpha,
                   const Permutation& beta, const Permutation& gamma) {
  const int n = q.order();
  for (const Permutation* p : {&alpha, &beta, &gamma}) {
    if (p->degree() != n) {
      throw Error(ErrorCode::kDegreeMismatch,
                  "permutation of degree " + std::to_string(p->degree()) +
                      " for a quasigroup of order " + std::to_string(n));
    }
  }
  const Permutation gamma_inv = gamma.inverse();
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(x * n + y)] = gamma_inv(q(alpha(x), beta(y)));
    }
  }
  return Quasigroup::FromCells(n, std::move(cells));
}

Quasigroup Relabel(const Quasigroup& q, const Permutation& phi) {
  const int n = q.order();
  if (phi.degree() != n) {
    throw Error(ErrorCode::kDegreeMismatch, "relabeling of wrong degree");
  }
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(phi(x) * n + phi(y))] = phi(q(x, y));
    }
  }
  return Quasigroup::FromCells(n, std::move(cells));
}

UnitInfo UnitPredicates(const Quasigroup& q) {
  const int n = q.order();
  UnitInfo info;
  for (Element e = 0; e < n && !info.left_unit; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = q(e, x) == x;
    if (ok) info.left_unit = e;
  }
  for (Element e = 0; e < n && !info.right_unit; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = q(x, e) == x;
    if (ok) info.right_unit = e;
  }
  info.is_loop = info.left_unit && info.right_unit && *info.left_unit == *info.right_unit;

  info.is_unipotent = true;
  for (Element x = 1; x < n && info.is_unipotent; ++x) {
    info.is_unipotent = q(x, x) == q(0, 0);
  }
  info.is_commutative = true;
  for (Element x = 0; x < n && info.is_commutative; ++x) {
    for (Element y = x + 1; y < n && info.is_commutative; ++y) {
      info.is_commutative = q(x, y) == q(y, x);
    }
  }
  info.is_associative = true;
  for (Element x = 0; x < n && info.is_associative; ++x) {
    for (Element y = 0; y < n && info.is_associative; ++y) {
      for (Element z = 0; z < n && info.is_associative; ++z) {
        info.is_associative = q(q(x, y), z) == q(x, q(y, z));
      }
    }
  }
  return info;
}

Quasigroup CyclicAdditionTable(int n) {
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) cells[static_cast<std::size_t>(x * n + y)] = (x + y) % n;
  }
  return Quasigroup::FromCells(n, std::move(cells), "Z" + std::to_string(n) + " addition");
}

Quasigroup CyclicSubtractionTable(int n) {
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(x * n + y)] = ((x - y) % n + n) % n;
    }
  }
  return Quasigroup::FromCells(n, std::move(cells),
                               "Z" + std::to_string(n) + " subtraction");
}

}  // namespace quasilab
