#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quasilab/abelian_group.hpp"
#include "quasilab/limits.hpp"
#include "quasilab/permutation.hpp"
#include "quasilab/quasigroup.hpp"

namespace quasilab {

// gamma(x*y) = alpha(x)*beta(y) for all x, y.
struct Autotopy {
  Permutation alpha;
  Permutation beta;
  Permutation gamma;

  static Autotopy Identity(int degree);

  // Componentwise composition; `other` acts first.
  Autotopy operator*(const Autotopy& other) const;
  Autotopy inverse() const;
  const Permutation& component(int which) const;  // 1, 2 or 3

  friend bool operator==(const Autotopy&, const Autotopy&) = default;
  friend auto operator<=>(const Autotopy&, const Autotopy&) = default;
};

bool IsAutotopy(const Quasigroup& q, const Autotopy& t);

// Complete list of autotopies, sorted by (alpha, beta, gamma) image sequences.
// Each (alpha, c) seed fixes gamma via gamma(x*0) = alpha(x)*c and then
// beta(y) = alpha(0) \ gamma(0*y); the seed survives if the triple verifies.
// `threads` <= 0 uses the hardware concurrency. Throws kOrderTooLarge.
std::vector<Autotopy> Autotopies(const Quasigroup& q, const Limits& limits = {},
                                 int threads = 1);

// {alpha : (alpha, alpha, alpha) is an autotopy}, sorted.
std::vector<Permutation> Automorphisms(const Quasigroup& q, const Limits& limits = {});

// alpha = L+_a theta, beta = L+_{-b} theta, gamma = L+_{a+b} theta, where L+
// are translations of the recovered abelian group and theta is in its
// automorphism group.
struct NeumannAutotopyDecomposition {
  Element a = 0;
  Element b = 0;
  Permutation theta;
};

// Throws kNoRightUnit/kNotAbelianGroup/kRepresentationMismatch if q is not of
// the form x - y, and kNotDecomposable if t does not split as above.
NeumannAutotopyDecomposition DecomposeAutotopy(const Quasigroup& q, const Autotopy& t);
NeumannAutotopyDecomposition DecomposeAutotopy(const AbelianGroup& g, const Autotopy& t);

// Right: (theta, R_c theta, R_c theta) is an autotopy.
// Left:  (L_c theta, theta, L_c theta) is an autotopy.
struct PseudoautomorphismWitness {
  Permutation theta;
  Element companion = 0;
  Side side = Side::kRight;

  // The autotopy this witness stands for.
  Autotopy AsAutotopy(const Quasigroup& q) const;

  friend bool operator==(const PseudoautomorphismWitness&,
                         const PseudoautomorphismWitness&) = default;
};

// All (theta, companion) pairs, sorted by (theta, companion).
std::vector<PseudoautomorphismWitness> Pseudoautomorphisms(
    const Quasigroup& q, Side side, const Limits& limits = {});
std::vector<PseudoautomorphismWitness> PseudoautomorphismsFrom(
    const Quasigroup& q, std::span<const Autotopy> autotopies, Side side);

// Right: autotopies of the form (alpha, beta, beta). Left: (alpha, beta, alpha).
std::vector<Autotopy> APseudoautomorphisms(const Quasigroup& q, Side side,
                                           const Limits& limits = {});
std::vector<Autotopy> APseudoautomorphismsFrom(std::span<const Autotopy> autotopies,
                                               Side side);

// Whether the group generated by component `which` (1, 2 or 3) of the given
// autotopies is transitive. Throws kEmptyList.
bool ComponentTransitive(std::span<const Autotopy> ts, int which);

struct GAFlags {
  bool left_ga = false;
  bool right_ga = false;
  bool ga = false;
};
struct GFlags {
  bool left_g = false;
  bool right_g = false;
};

GAFlags IsGA(const Quasigroup& q, const Limits& limits = {});
GFlags IsG(const Quasigroup& q, const Limits& limits = {});
GAFlags IsGAFrom(const Quasigroup& q, std::span<const Autotopy> autotopies);
GFlags IsGFrom(const Quasigroup& q, std::span<const Autotopy> autotopies);

enum class NucleusSide { kLeft, kMiddle, kRight };

// Right: {a : x*(y*a) = (x*y)*a}. Left: {a : a*(x*y) = (a*x)*y}.
// Middle: {a : x*(a*y) = (x*a)*y}. Sorted.
std::vector<Element> Nucleus(const Quasigroup& q, NucleusSide side);

using Triple = std::array<Element, 3>;

// x(y*xz) = R^{-1}_{e_x}(x*yx)*z with x*e_x = x.
std::optional<Triple> LeftBolViolation(const Quasigroup& q);
// x(y*xz) = (x*yf_x)x*z with f_x*x = x.
std::optional<Triple> MoufangViolation(const Quasigroup& q);
bool CheckLeftBol(const Quasigroup& q);
bool CheckMoufang(const Quasigroup& q);

struct Distributivity {
  bool left = false;   // x o (y o z) = (x o y) o (x o z)
  bool right = false;  // (x o y) o z = (x o z) o (y o z)
};

Distributivity CoreDistributive(const Quasigroup& q);
Distributivity IsDistributive(const Magma& m);

// The LP-isotope x o y = R_a^{-1}(x) * L_b^{-1}(y); a loop with unit b*a.
Quasigroup PrincipalLoopIsotope(const Quasigroup& q, Element a, Element b);

}  // namespace quasilab
