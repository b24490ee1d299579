#pragma once

#include <optional>
#include <vector>

#include "quasilab/limits.hpp"
#include "quasilab/quasigroup.hpp"

namespace quasilab {

// The lexicographically least phi with phi(x*y) = phi(x) o phi(y), where * is
// the operation of `from` and o that of `to`. Throws kOrderMismatch.
std::optional<Permutation> Isomorphic(const Quasigroup& from, const Quasigroup& to);

// Every isomorphism from `from` to `to`, sorted.
std::vector<Permutation> AllIsomorphisms(const Quasigroup& from, const Quasigroup& to);

// Lexicographically least table among all relabelings of q. Two quasigroups
// are isomorphic iff their canonical forms coincide. Throws kOrderTooLarge
// above limits.max_isomorphism_order.
Quasigroup CanonicalForm(const Quasigroup& q, const Limits& limits = {});

}  // namespace quasilab
