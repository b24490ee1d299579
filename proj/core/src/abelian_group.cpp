#include "quasilab/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "quasilab/error.hpp"

namespace quasilab {
namespace {

std::string TripleText(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

AbelianGroup::AbelianGroup(int order, std::vector<Element> add, Element zero,
                           std::optional<std::vector<int>> factors)
    : order_(order), add_(std::move(add)), zero_(zero), factors_(std::move(factors)) {
  const auto n = static_cast<std::size_t>(order_);
  if (order_ <= 0 || add_.size() != n * n) {
    throw Error(ErrorCode::kNotAbelianGroup, "table shape does not match order " +
                                                 std::to_string(order_));
  }
  if (zero_ < 0 || zero_ >= order_) {
    throw Error(ErrorCode::kNotAbelianGroup, "zero " + std::to_string(zero_) + " out of range");
  }
  for (Element v : add_) {
    if (v < 0 || v >= order_) {
      throw Error(ErrorCode::kNotAbelianGroup, "entry " + std::to_string(v) + " out of range");
    }
  }
  for (Element a = 0; a < order_; ++a) {
    if (this->add(zero_, a) != a || this->add(a, zero_) != a) {
      throw Error(ErrorCode::kNotAbelianGroup,
                  "zero " + std::to_string(zero_) + " is not a unit for " + std::to_string(a));
    }
  }
  neg_.assign(n, -1);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (this->add(a, b) == zero_) {
        neg_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (neg_[static_cast<std::size_t>(a)] < 0) {
      throw Error(ErrorCode::kNotAbelianGroup, "element " + std::to_string(a) +
                                                   " has no inverse");
    }
  }
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (this->add(a, b) != this->add(b, a)) {
        throw Error(ErrorCode::kNotAbelianGroup,
                    "not commutative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      const Element ab = this->add(a, b);
      for (Element c = 0; c < order_; ++c) {
        if (this->add(ab, c) != this->add(a, this->add(b, c))) {
          throw Error(ErrorCode::kNotAbelianGroup, "not associative at " + TripleText(a, b, c));
        }
      }
    }
  }
  // Unit plus associativity plus inverses make this a group, hence Latin.
}

Element AbelianGroup::multiple(Element a, int k) const noexcept {
  Element acc = zero_;
  for (int i = 0; i < k; ++i) acc = add(acc, a);
  return acc;
}

int AbelianGroup::element_order(Element a) const noexcept {
  int k = 1;
  for (Element acc = a; acc != zero_; acc = add(acc, a)) ++k;
  return k;
}

Permutation AbelianGroup::translation(Element a) const {
  std::vector<Element> image(static_cast<std::size_t>(order_));
  for (Element y = 0; y < order_; ++y) image[static_cast<std::size_t>(y)] = add(a, y);
  return Permutation(std::move(image));
}

Quasigroup AbelianGroup::as_quasigroup() const {
  return Quasigroup::FromCells(order_, add_, name());
}

std::string AbelianGroup::name() const {
  if (!factors_) return "G" + std::to_string(order_);
  if (factors_->empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors_->size(); ++i) {
    if (i) out += 'x';
    out += "Z" + std::to_string((*factors_)[i]);
  }
  return out;
}

AbelianGroup Cyclic(int n) {
  if (n < 1 || n > kMaxTableOrder) {
    throw Error(ErrorCode::kOutOfRange, "cyclic group order " + std::to_string(n) +
                                            " outside 1.." + std::to_string(kMaxTableOrder));
  }
  std::vector<Element> add(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) add[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  }
  return AbelianGroup(n, std::move(add), 0, std::vector<int>{n});
}

AbelianGroup DirectProduct(const std::vector<AbelianGroup>& groups) {
  long total = 1;
  bool structural = true;
  std::vector<int> factors;
  for (const auto& g : groups) {
    total *= g.order();
    if (total > kMaxTableOrder) {
      throw Error(ErrorCode::kOrderTooLarge, "direct product order exceeds " +
                                                 std::to_string(kMaxTableOrder));
    }
    if (g.factors()) {
      for (int f : *g.factors()) {
        if (f > 1) factors.push_back(f);
      }
    } else {
      structural = false;
    }
  }
  const int n = static_cast<int>(total);
  // Digits of element e, first factor most significant.
  auto decode = [&](int e) {
    std::vector<int> digits(groups.size());
    for (std::size_t i = groups.size(); i-- > 0;) {
      digits[i] = e % groups[i].order();
      e /= groups[i].order();
    }
    return digits;
  };
  auto encode = [&](const std::vector<int>& digits) {
    int e = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) e = e * groups[i].order() + digits[i];
    return e;
  };
  std::vector<int> zero_digits(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) zero_digits[i] = groups[i].zero();

  std::vector<Element> add(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    const auto da = decode(a);
    for (int b = 0; b < n; ++b) {
      const auto db = decode(b);
      std::vector<int> sum(groups.size());
      for (std::size_t i = 0; i < groups.size(); ++i) sum[i] = groups[i].add(da[i], db[i]);
      add[static_cast<std::size_t>(a * n + b)] = encode(sum);
    }
  }
  std::optional<std::vector<int>> out_factors;
  if (structural) out_factors = std::move(factors);
  return AbelianGroup(n, std::move(add), encode(zero_digits), std::move(out_factors));
}

AbelianGroup GroupFromSpec(std::string_view spec) {
  std::vector<AbelianGroup> parts;
  std::size_t pos = 0;
  const std::string original(spec);
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kBadGroupSpec, "'" + original + "': " + why);
  };
  if (spec.empty()) throw fail("empty group spec");
  while (pos <= spec.size()) {
    std::size_t end = pos;
    while (end < spec.size() && spec[end] != 'x' && spec[end] != 'X') ++end;
    const std::string_view token = spec.substr(pos, end - pos);
    if (token.size() < 2 || (token[0] != 'Z' && token[0] != 'z')) {
      throw fail("expected a factor like Z4");
    }
    long n = 0;
    for (char c : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("bad cyclic order");
      n = n * 10 + (c - '0');
      if (n > kMaxTableOrder) throw fail("cyclic order too large");
    }
    if (n < 1) throw fail("cyclic order must be at least 1");
    parts.push_back(Cyclic(static_cast<int>(n)));
    if (end == spec.size()) break;
    pos = end + 1;
  }
  if (parts.size() == 1) return parts.front();
  return DirectProduct(parts);
}

namespace {

// Partitions of k with parts in non-increasing order, largest first.
void Partitions(int k, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    current.push_back(part);
    Partitions(k - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<AbelianGroup> EnumerateAbelianGroups(int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "group order must be positive");
  if (n > limits.max_abelian_order || n > kMaxTableOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "abelian group enumeration bound is " +
                                               std::to_string(limits.max_abelian_order));
  }
  // Prime factorization, primes ascending.
  std::vector<std::pair<int, int>> primes;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (rest > 1) primes.emplace_back(rest, 1);

  std::vector<std::vector<std::vector<int>>> choices;  // per prime: factor lists
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> scratch;
    Partitions(e, e, scratch, parts);
    std::vector<std::vector<int>> factor_lists;
    for (const auto& part : parts) {
      std::vector<int> factors;
      for (int k : part) {
        int q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        factors.push_back(q);
      }
      factor_lists.push_back(std::move(factors));
    }
    choices.push_back(std::move(factor_lists));
  }

  std::vector<AbelianGroup> out;
  std::vector<int> factors;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == choices.size()) {
      std::vector<AbelianGroup> cyclics;
      for (int f : factors) cyclics.push_back(Cyclic(f));
      if (cyclics.empty()) {
        out.push_back(Cyclic(1));
      } else if (cyclics.size() == 1) {
        out.push_back(cyclics.front());
      } else {
        out.push_back(DirectProduct(cyclics));
      }
      return;
    }
    for (const auto& list : choices[i]) {
      const std::size_t mark = factors.size();
      factors.insert(factors.end(), list.begin(), list.end());
      walk(i + 1);
      factors.resize(mark);
    }
  };
  walk(0);
  return out;
}

bool IsAutomorphism(const AbelianGroup& g, const Permutation& theta) {
  const int n = g.order();
  if (theta.degree() != n) return false;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (theta(g.add(a, b)) != g.add(theta(a), theta(b))) return false;
    }
  }
  return true;
}

std::vector<Permutation> AutomorphismGroup(const AbelianGroup& g, const Limits& limits) {
  const int n = g.order();
  if (n > limits.max_automorphism_order) {
    throw Error(ErrorCode::kOrderTooLarge, "automorphism search bound is " +
                                               std::to_string(limits.max_automorphism_order));
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> orders(un);
  for (Element a = 0; a < n; ++a) orders[static_cast<std::size_t>(a)] = g.element_order(a);

  // Greedy generating set: repeatedly adjoin an element of largest order
  // outside the current subgroup.
  std::vector<Element> generators;
  {
    std::vector<bool> in_span(un, false);
    std::vector<Element> span{g.zero()};
    in_span[static_cast<std::size_t>(g.zero())] = true;
    while (span.size() < un) {
      Element best = -1;
      for (Element a = 0; a < n; ++a) {
        if (!in_span[static_cast<std::size_t>(a)] &&
            (best < 0 || orders[static_cast<std::size_t>(a)] >
                             orders[static_cast<std::size_t>(best)])) {
          best = a;
        }
      }
      generators.push_back(best);
      const std::vector<Element> base = span;
      for (Element m = g.add(best, g.zero()); m != g.zero(); m = g.add(m, best)) {
        for (Element s : base) {
          const Element e = g.add(s, m);
          if (!in_span[static_cast<std::size_t>(e)]) {
            in_span[static_cast<std::size_t>(e)] = true;
            span.push_back(e);
          }
        }
      }
    }
  }

  std::vector<Permutation> out;
  // phi is defined exactly on the elements of `domain`, a subgroup.
  std::function<void(std::size_t, const std::vector<Element>&, const std::vector<bool>&,
                     const std::vector<Element>&)>
      extend = [&](std::size_t gi, const std::vector<Element>& phi,
                   const std::vector<bool>& used, const std::vector<Element>& domain) {
        if (gi == generators.size()) {
          Permutation theta(phi);
          if (IsAutomorphism(g, theta)) out.push_back(std::move(theta));
          return;
        }
        const Element gen = generators[gi];
        const int gen_order = orders[static_cast<std::size_t>(gen)];
        for (Element h = 0; h < n; ++h) {
          if (orders[static_cast<std::size_t>(h)] != gen_order) continue;
          std::vector<Element> next_phi = phi;
          std::vector<bool> next_used = used;
          std::vector<Element> next_domain = domain;
          bool ok = true;
          Element mg = gen;
          Element mh = h;
          for (int m = 1; m <= gen_order && ok; ++m) {
            for (Element s : domain) {
              const Element e = g.add(s, mg);
              const Element img = g.add(phi[static_cast<std::size_t>(s)], mh);
              Element& slot = next_phi[static_cast<std::size_t>(e)];
              if (slot < 0) {
                if (next_used[static_cast<std::size_t>(img)]) {
                  ok = false;
                  break;
                }
                slot = img;
                next_used[static_cast<std::size_t>(img)] = true;
                next_domain.push_back(e);
              } else if (slot != img) {
                ok = false;
                break;
              }
            }
            mg = g.add(mg, gen);
            mh = g.add(mh, h);
          }
          if (ok) extend(gi + 1, next_phi, next_used, next_domain);
        }
      };

  std::vector<Element> phi(un, -1);
  std::vector<bool> used(un, false);
  phi[static_cast<std::size_t>(g.zero())] = g.zero();
  used[static_cast<std::size_t>(g.zero())] = true;
  extend(0, phi, used, {g.zero()});
  std::sort(out.begin(), out.end());
  return out;
}

Quasigroup SubtractionQuasigroup(const AbelianGroup& g) {
  const int n = g.order();
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) cells[static_cast<std::size_t>(x * n + y)] = g.sub(x, y);
  }
  return Quasigroup::FromCells(n, std::move(cells), g.name() + " subtraction");
}

AbelianGroup RecoverGroup(const Quasigroup& q) {
  const int n = q.order();
  std::optional<Element> unit;
  for (Element e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = q(x, e) == x;
    if (ok) unit = e;
  }
  if (!unit) throw Error(ErrorCode::kNoRightUnit, "quasigroup has no right unit");
  const Element e = *unit;

  std::vector<Element> add(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) add[static_cast<std::size_t>(x * n + y)] = q(x, q(e, y));
  }
  AbelianGroup g(n, std::move(add), e);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (q(x, y) != g.sub(x, y)) {
        throw Error(ErrorCode::kRepresentationMismatch,
                    std::to_string(x) + "*" + std::to_string(y) + " = " +
                        std::to_string(q(x, y)) + " but " + std::to_string(x) + " - " +
                        std::to_string(y) + " = " + std::to_string(g.sub(x, y)));
      }
    }
  }
  return g;
}

std::vector<Element> TwoTorsion(const AbelianGroup& g) {
  std::vector<Element> out;
  for (Element a = 0; a < g.order(); ++a) {
    if (g.add(a, a) == g.zero()) out.push_back(a);
  }
  return out;
}

Magma CoreGroupoid(const Quasigroup& q) {
  const int n = q.order();
  Magma m{n, std::vector<Element>(static_cast<std::size_t>(n * n))};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) m.cells[static_cast<std::size_t>(x * n + y)] = q(x, q(y, x));
  }
  return m;
}

}  // namespace quasilab
