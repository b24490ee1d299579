#pragma once

namespace quasilab {

// Order bounds for the exhaustive procedures. The defaults keep every
// operation within a few seconds on a laptop.
struct Limits {
  int max_model_order = 6;           // identities with at most 3 variables
  int max_model_order_4var = 5;      // identities with 4 variables
  int max_autotopy_order = 7;
  int max_automorphism_order = 16;
  int max_abelian_order = 256;
  int max_isomorphism_order = 8;     // brute-force canonical forms

  // Defaults, with QUASILAB_MAX_ORDER (if set to a positive integer)
  // replacing both model-search bounds.
  static Limits FromEnvironment();
};

// Largest Cayley table the library stores.
inline constexpr int kMaxTableOrder = 256;
// Hard ceiling of the model finder (32-bit candidate masks).
inline constexpr int kMaxSearchOrder = 32;

}  // namespace quasilab
