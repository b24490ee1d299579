#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quasilab/limits.hpp"
#include "quasilab/quasigroup.hpp"

namespace quasilab {

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string_view ClaimStatusName(ClaimStatus s);

struct ClaimRecord {
  std::string claim_id;
  std::string anchor;
  std::vector<int> orders_tested;
  ClaimStatus status = ClaimStatus::kSkipped;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;
  // True iff no claim failed.
  bool overall() const;
};

struct VerifyOptions {
  int max_order = 5;             // model enumeration
  int max_autotopy_order = 6;
  int max_construction_order = 8;
  int threads = 1;
  Limits limits;
  // Debug hook: corrupts every constructed subtraction table with one cell
  // flip (repaired by a row swap) before it is checked.
  bool inject_mutant = false;
};

// Throws kOrderTooLarge when a bound exceeds the configured limits.
VerificationReport VerifyAll(const VerifyOptions& opts);

void PrintReport(std::ostream& os, const VerificationReport& report);

// Sets cell (row, col) to `value` and restores the Latin property by swapping
// row `row` with the row that held `value` in column `col`.
Quasigroup FlipCell(const Quasigroup& q, Element row, Element col, Element value);

// The per-table checks behind the representation, autotopy and structural
// claims; each returns a description of the first failure.
std::optional<std::string> CheckRepresentation(const Quasigroup& q);
std::optional<std::string> CheckAutotopyStructure(const Quasigroup& q,
                                                  const Limits& limits = {});
std::optional<std::string> CheckNeumannStructure(const Quasigroup& q);

}  // namespace quasilab
