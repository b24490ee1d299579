#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quasilab/limits.hpp"
#include "quasilab/quasigroup.hpp"
#include "quasilab/verification.hpp"

namespace quasilab::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSemanticFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs `quasilab <args...>`; args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The `analyze` report (schema 1).
nlohmann::ordered_json AnalyzeReport(const Quasigroup& q, const Limits& limits, int threads = 1);

nlohmann::ordered_json ReportToJson(const VerificationReport& report);

}  // namespace quasilab::cli
