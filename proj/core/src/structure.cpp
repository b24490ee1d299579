#include "quasilab/structure.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "quasilab/error.hpp"
#include "quasilab/isomorphism.hpp"

namespace quasilab {
namespace {

int ResolveThreads(int threads, int tasks) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(threads, 1, std::max(tasks, 1));
}

void CheckBound(const Quasigroup& q, int bound, const char* what) {
  if (q.order() > bound) {
    throw Error(ErrorCode::kOrderTooLarge, std::string(what) + " bound is " +
                                               std::to_string(bound) + ", got order " +
                                               std::to_string(q.order()));
  }
}

// All autotopies whose alpha sends 0 to `first`.
std::vector<Autotopy> AutotopiesWithAlphaZero(const Quasigroup& q, Element first) {
  const int n = q.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<Element> rest;
  for (Element v = 0; v < n; ++v) {
    if (v != first) rest.push_back(v);
  }
  std::vector<Element> alpha(un);
  std::vector<Element> beta(un);
  std::vector<Element> gamma(un);
  std::vector<Autotopy> out;
  do {
    alpha[0] = first;
    std::copy(rest.begin(), rest.end(), alpha.begin() + 1);
    for (Element c = 0; c < n; ++c) {
      // gamma(x*0) = alpha(x)*c; x -> x*0 is a bijection so gamma is total.
      for (Element x = 0; x < n; ++x) {
        gamma[static_cast<std::size_t>(q(x, 0))] = q(alpha[static_cast<std::size_t>(x)], c);
      }
      // alpha(0)*beta(y) = gamma(0*y).
      for (Element y = 0; y < n; ++y) {
        beta[static_cast<std::size_t>(y)] =
            q.ldiv_unchecked(first, gamma[static_cast<std::size_t>(q(0, y))]);
      }
      bool ok = true;
      for (Element x = 1; x < n && ok; ++x) {
        const Element ax = alpha[static_cast<std::size_t>(x)];
        for (Element y = 1; y < n; ++y) {
          if (gamma[static_cast<std::size_t>(q(x, y))] !=
              q(ax, beta[static_cast<std::size_t>(y)])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) out.push_back({Permutation(alpha), Permutation(beta), Permutation(gamma)});
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

Autotopy Autotopy::Identity(int degree) {
  const Permutation id = Permutation::Identity(degree);
  return {id, id, id};
}

Autotopy Autotopy::operator*(const Autotopy& other) const {
  return {alpha * other.alpha, beta * other.beta, gamma * other.gamma};
}

Autotopy Autotopy::inverse() const {
  return {alpha.inverse(), beta.inverse(), gamma.inverse()};
}

const Permutation& Autotopy::component(int which) const {
  switch (which) {
    case 1: return alpha;
    case 2: return beta;
    case 3: return gamma;
    default:
      throw Error(ErrorCode::kOutOfRange, "autotopy component must be 1, 2 or 3");
  }
}

bool IsAutotopy(const Quasigroup& q, const Autotopy& t) {
  const int n = q.order();
  if (t.alpha.degree() != n || t.beta.degree() != n || t.gamma.degree() != n) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (t.gamma(q(x, y)) != q(t.alpha(x), t.beta(y))) return false;
    }
  }
  return true;
}

std::vector<Autotopy> Autotopies(const Quasigroup& q, const Limits& limits, int threads) {
  CheckBound(q, limits.max_autotopy_order, "autotopy enumeration");
  const int n = q.order();
  std::vector<std::vector<Autotopy>> per_first(static_cast<std::size_t>(n));
  const int workers = ResolveThreads(threads, n);
  if (workers == 1) {
    for (Element first = 0; first < n; ++first) {
      per_first[static_cast<std::size_t>(first)] = AutotopiesWithAlphaZero(q, first);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int first = next++; first < n; first = next++) {
          per_first[static_cast<std::size_t>(first)] = AutotopiesWithAlphaZero(q, first);
        }
      });
    }
  }
  std::vector<Autotopy> out;
  for (auto& part : per_first) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> Automorphisms(const Quasigroup& q, const Limits& limits) {
  CheckBound(q, limits.max_automorphism_order, "automorphism enumeration");
  return AllIsomorphisms(q, q);
}

NeumannAutotopyDecomposition DecomposeAutotopy(const AbelianGroup& g, const Autotopy& t) {
  const int n = g.order();
  if (t.alpha.degree() != n || t.beta.degree() != n || t.gamma.degree() != n) {
    throw Error(ErrorCode::kDegreeMismatch, "autotopy degree differs from group order");
  }
  const Element zero = g.zero();
  NeumannAutotopyDecomposition d;
  // theta fixes zero, so alpha(0) = a + theta(0) = a.
  d.a = t.alpha(zero);
  d.b = g.neg(t.beta(zero));
  std::vector<Element> theta(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) theta[static_cast<std::size_t>(x)] = g.sub(t.alpha(x), d.a);
  d.theta = Permutation(std::move(theta));

  const Element minus_b = g.neg(d.b);
  const Element a_plus_b = g.add(d.a, d.b);
  for (Element x = 0; x < n; ++x) {
    if (t.beta(x) != g.add(minus_b, d.theta(x)) || t.gamma(x) != g.add(a_plus_b, d.theta(x))) {
      throw Error(ErrorCode::kNotDecomposable,
                  "components disagree with a=" + std::to_string(d.a) +
                      ", b=" + std::to_string(d.b) + " at " + std::to_string(x));
    }
  }
  if (!IsAutomorphism(g, d.theta)) {
    throw Error(ErrorCode::kNotDecomposable,
                "theta " + d.theta.ToString() + " is not an automorphism");
  }
  return d;
}

NeumannAutotopyDecomposition DecomposeAutotopy(const Quasigroup& q, const Autotopy& t) {
  return DecomposeAutotopy(RecoverGroup(q), t);
}

Autotopy PseudoautomorphismWitness::AsAutotopy(const Quasigroup& q) const {
  const Permutation translate = q.translation(side, companion);
  if (side == Side::kRight) return {theta, translate * theta, translate * theta};
  return {translate * theta, theta, translate * theta};
}

std::vector<PseudoautomorphismWitness> PseudoautomorphismsFrom(
    const Quasigroup& q, std::span<const Autotopy> autotopies, Side side) {
  const int n = q.order();
  std::vector<PseudoautomorphismWitness> out;
  for (const Autotopy& t : autotopies) {
    if (side == Side::kRight) {
      if (t.beta != t.gamma) continue;
      // beta = R_c alpha forces alpha(0)*c = beta(0).
      const Element c = q.ldiv_unchecked(t.alpha(0), t.beta(0));
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = t.beta(x) == q(t.alpha(x), c);
      if (ok) out.push_back({t.alpha, c, Side::kRight});
    } else {
      if (t.alpha != t.gamma) continue;
      // alpha = L_c beta forces c*beta(0) = alpha(0).
      const Element c = q.rdiv_unchecked(t.alpha(0), t.beta(0));
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = t.alpha(x) == q(c, t.beta(x));
      if (ok) out.push_back({t.beta, c, Side::kLeft});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.companion < b.companion;
  });
  return out;
}

std::vector<PseudoautomorphismWitness> Pseudoautomorphisms(const Quasigroup& q, Side side,
                                                           const Limits& limits) {
  const auto all = Autotopies(q, limits);
  return PseudoautomorphismsFrom(q, all, side);
}

std::vector<Autotopy> APseudoautomorphismsFrom(std::span<const Autotopy> autotopies,
                                               Side side) {
  std::vector<Autotopy> out;
  for (const Autotopy& t : autotopies) {
    if (side == Side::kRight ? t.beta == t.gamma : t.alpha == t.gamma) out.push_back(t);
  }
  return out;
}

std::vector<Autotopy> APseudoautomorphisms(const Quasigroup& q, Side side,
                                           const Limits& limits) {
  const auto all = Autotopies(q, limits);
  return APseudoautomorphismsFrom(all, side);
}

bool ComponentTransitive(std::span<const Autotopy> ts, int which) {
  if (ts.empty()) throw Error(ErrorCode::kEmptyList, "no autotopies given");
  std::vector<Permutation> generators;
  generators.reserve(ts.size());
  for (const Autotopy& t : ts) generators.push_back(t.component(which));
  return static_cast<int>(Orbit(generators, 0).size()) == generators.front().degree();
}

GAFlags IsGAFrom(const Quasigroup&, std::span<const Autotopy> autotopies) {
  GAFlags f;
  const auto right = APseudoautomorphismsFrom(autotopies, Side::kRight);
  const auto left = APseudoautomorphismsFrom(autotopies, Side::kLeft);
  f.right_ga = !right.empty() && ComponentTransitive(right, 3);
  f.left_ga = !left.empty() && ComponentTransitive(left, 3);
  f.ga = f.left_ga && f.right_ga;
  return f;
}

GFlags IsGFrom(const Quasigroup& q, std::span<const Autotopy> autotopies) {
  auto third_components_transitive = [&](Side side) {
    const auto witnesses = PseudoautomorphismsFrom(q, autotopies, side);
    if (witnesses.empty()) return false;
    std::vector<Autotopy> triples;
    for (const auto& w : witnesses) triples.push_back(w.AsAutotopy(q));
    return ComponentTransitive(triples, 3);
  };
  return {third_components_transitive(Side::kLeft), third_components_transitive(Side::kRight)};
}

GAFlags IsGA(const Quasigroup& q, const Limits& limits) {
  const auto all = Autotopies(q, limits);
  return IsGAFrom(q, all);
}

GFlags IsG(const Quasigroup& q, const Limits& limits) {
  const auto all = Autotopies(q, limits);
  return IsGFrom(q, all);
}

std::vector<Element> Nucleus(const Quasigroup& q, NucleusSide side) {
  const int n = q.order();
  std::vector<Element> out;
  for (Element a = 0; a < n; ++a) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        switch (side) {
          case NucleusSide::kRight: ok = q(x, q(y, a)) == q(q(x, y), a); break;
          case NucleusSide::kLeft: ok = q(a, q(x, y)) == q(q(a, x), y); break;
          case NucleusSide::kMiddle: ok = q(x, q(a, y)) == q(q(x, a), y); break;
        }
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::optional<Triple> LeftBolViolation(const Quasigroup& q) {
  const int n = q.order();
  for (Element x = 0; x < n; ++x) {
    const Element ex = q.ldiv_unchecked(x, x);  // x*e_x = x
    for (Element y = 0; y < n; ++y) {
      // R_{e_x}^{-1}(w) is the z with z*e_x = w, i.e. w / e_x.
      const Element left_factor = q.rdiv_unchecked(q(x, q(y, x)), ex);
      for (Element z = 0; z < n; ++z) {
        if (q(x, q(y, q(x, z))) != q(left_factor, z)) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> MoufangViolation(const Quasigroup& q) {
  const int n = q.order();
  for (Element x = 0; x < n; ++x) {
    const Element fx = q.rdiv_unchecked(x, x);  // f_x*x = x
    for (Element y = 0; y < n; ++y) {
      const Element left_factor = q(q(x, q(y, fx)), x);
      for (Element z = 0; z < n; ++z) {
        if (q(x, q(y, q(x, z))) != q(left_factor, z)) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool CheckLeftBol(const Quasigroup& q) { return !LeftBolViolation(q); }
bool CheckMoufang(const Quasigroup& q) { return !MoufangViolation(q); }

Distributivity IsDistributive(const Magma& m) {
  const int n = m.order;
  Distributivity d{true, true};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (d.left && m(x, m(y, z)) != m(m(x, y), m(x, z))) d.left = false;
        if (d.right && m(m(x, y), z) != m(m(x, z), m(y, z))) d.right = false;
      }
    }
  }
  return d;
}

Distributivity CoreDistributive(const Quasigroup& q) { return IsDistributive(CoreGroupoid(q)); }

Quasigroup PrincipalLoopIsotope(const Quasigroup& q, Element a, Element b) {
  const int n = q.order();
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x) {
    const Element left = q.rdiv(x, a);
    for (Element y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(x * n + y)] = q(left, q.ldiv_unchecked(b, y));
    }
  }
  return Quasigroup::FromCells(n, std::move(cells));
}

}  // namespace quasilab
