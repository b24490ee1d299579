#include "quasilab/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "quasilab/error.hpp"

namespace quasilab {
namespace {

// Depth-first search over phi with forward propagation of
// phi(x*y) = phi(x) o phi(y). Leaves are visited in lexicographic order.
// `visit` returns false to stop the search.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Quasigroup& from, const Quasigroup& to)
      : from_(from), to_(to), n_(from.order()) {}

  void Run(const std::function<bool(const Permutation&)>& visit) {
    std::vector<Element> phi(static_cast<std::size_t>(n_), -1);
    std::vector<Element> inv(static_cast<std::size_t>(n_), -1);
    Recurse(phi, inv, visit);
  }

 private:
  bool Assign(std::vector<Element>& phi, std::vector<Element>& inv, Element x, Element v) {
    if (inv[static_cast<std::size_t>(v)] >= 0) return false;
    phi[static_cast<std::size_t>(x)] = v;
    inv[static_cast<std::size_t>(v)] = x;
    return true;
  }

  bool Propagate(std::vector<Element>& phi, std::vector<Element>& inv) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element a = 0; a < n_; ++a) {
        const Element pa = phi[static_cast<std::size_t>(a)];
        if (pa < 0) continue;
        for (Element b = 0; b < n_; ++b) {
          const Element pb = phi[static_cast<std::size_t>(b)];
          if (pb < 0) continue;
          const Element c = from_(a, b);
          const Element target = to_(pa, pb);
          const Element pc = phi[static_cast<std::size_t>(c)];
          if (pc < 0) {
            if (!Assign(phi, inv, c, target)) return false;
            changed = true;
          } else if (pc != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool Recurse(std::vector<Element>& phi, std::vector<Element>& inv,
               const std::function<bool(const Permutation&)>& visit) {
    auto it = std::find(phi.begin(), phi.end(), -1);
    if (it == phi.end()) return visit(Permutation(phi));
    const auto x = static_cast<Element>(it - phi.begin());
    for (Element v = 0; v < n_; ++v) {
      if (inv[static_cast<std::size_t>(v)] >= 0) continue;
      std::vector<Element> next_phi = phi;
      std::vector<Element> next_inv = inv;
      Assign(next_phi, next_inv, x, v);
      if (Propagate(next_phi, next_inv) && !Recurse(next_phi, next_inv, visit)) {
        return false;
      }
    }
    return true;
  }

  const Quasigroup& from_;
  const Quasigroup& to_;
  int n_;
};

void CheckOrders(const Quasigroup& a, const Quasigroup& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::kOrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                               std::to_string(b.order()) + " differ");
  }
}

}  // namespace

std::optional<Permutation> Isomorphic(const Quasigroup& from, const Quasigroup& to) {
  CheckOrders(from, to);
  std::optional<Permutation> found;
  IsomorphismSearch(from, to).Run([&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Permutation> AllIsomorphisms(const Quasigroup& from, const Quasigroup& to) {
  CheckOrders(from, to);
  std::vector<Permutation> out;
  IsomorphismSearch(from, to).Run([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Quasigroup CanonicalForm(const Quasigroup& q, const Limits& limits) {
  const int n = q.order();
  if (n > limits.max_isomorphism_order) {
    throw Error(ErrorCode::kOrderTooLarge, "canonical form bound is " +
                                               std::to_string(limits.max_isomorphism_order));
  }
  const auto un = static_cast<std::size_t>(n);
  // psi maps new labels to old ones; the relabeled cell (i, j) is
  // psi^-1(q(psi(i), psi(j))).
  std::vector<Element> psi(un);
  std::iota(psi.begin(), psi.end(), 0);
  std::vector<Element> psi_inv(un);
  std::vector<Element> best(q.cells().begin(), q.cells().end());
  do {
    for (std::size_t i = 0; i < un; ++i) psi_inv[static_cast<std::size_t>(psi[i])] = static_cast<Element>(i);
    bool less = false;
    bool decided = false;
    for (std::size_t i = 0; i < un && !decided; ++i) {
      for (std::size_t j = 0; j < un; ++j) {
        const Element v = psi_inv[static_cast<std::size_t>(q(psi[i], psi[j]))];
        const Element b = best[i * un + j];
        if (v != b) {
          less = v < b;
          decided = true;
          break;
        }
      }
    }
    if (less) {
      for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
          best[i * un + j] = psi_inv[static_cast<std::size_t>(q(psi[i], psi[j]))];
        }
      }
    }
  } while (std::next_permutation(psi.begin(), psi.end()));
  return Quasigroup::FromCells(n, std::move(best));
}

}  // namespace quasilab
