#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "quasilab/identity.hpp"
#include "quasilab/limits.hpp"
#include "quasilab/quasigroup.hpp"

namespace quasilab {

struct SearchProgress {
  std::uint64_t nodes = 0;
  std::uint64_t models = 0;
};

struct SearchOptions {
  int order = 1;
  std::vector<Identity> identities;
  bool up_to_isomorphism = false;
  std::optional<std::uint64_t> limit;
  // Called every `progress_interval` search nodes (per worker).
  std::optional<std::uint64_t> progress_interval;
  std::function<void(const SearchProgress&)> on_progress;
  // Worker threads; <= 0 means hardware concurrency. The output never
  // depends on this value.
  int threads = 1;
  Limits limits;
};

// The largest order `find_all` accepts for these identities.
int MaxSearchOrder(const std::vector<Identity>& identities, const Limits& limits);

// Every order-n quasigroup satisfying all identities, in lexicographic table
// order. With up_to_isomorphism, the lexicographically least member of each
// isomorphism class instead. With `limit`, the first `limit` models met in
// the (deterministic) search order, then sorted.
// Throws kOrderTooLarge or kTooManyVariables (more than 4 variables).
std::vector<Quasigroup> FindAll(const SearchOptions& opts);

std::uint64_t Count(const SearchOptions& opts);

struct EquivalenceReport {
  bool same_models = true;
  std::uint64_t only_first = 0;
  std::uint64_t only_second = 0;
  std::uint64_t common = 0;
};

EquivalenceReport CompareModels(int n, const Identity& first, const Identity& second,
                                const Limits& limits = {}, int threads = 1);

struct ImplicationResult {
  bool holds = true;
  std::optional<Quasigroup> witness;
};

// Whether every order-n model of `hypothesis` satisfies `conclusion`; the
// witness is the least counter-model otherwise.
ImplicationResult ImpliesOnOrder(int n, const Identity& hypothesis,
                                 const Identity& conclusion,
                                 const Limits& limits = {}, int threads = 1);

}  // namespace quasilab
