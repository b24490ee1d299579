#include "cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "quasilab/abelian_group.hpp"
#include "quasilab/error.hpp"
#include "quasilab/identity.hpp"
#include "quasilab/model_finder.hpp"
#include "quasilab/structure.hpp"
#include "quasilab/table_io.hpp"

namespace quasilab::cli {
namespace {

struct GlobalOptions {
  std::optional<int> max_order;
  int threads = 1;
  std::string format = "text";
};

struct IdentityArgs {
  std::vector<std::string> names;
  std::vector<std::string> exprs;

  std::vector<Identity> Resolve() const {
    std::vector<Identity> out;
    for (const auto& name : names) out.push_back(Builtin(name));
    for (const auto& expr : exprs) out.push_back(ParseIdentity(expr));
    return out;
  }
};

void AddIdentityOptions(CLI::App* cmd, IdentityArgs& ids) {
  cmd->add_option("--identity", ids.names, "Builtin identity name (repeatable)");
  cmd->add_option("--identity-expr", ids.exprs, "Identity text, e.g. \"x*y = y*x\" (repeatable)");
}

nlohmann::ordered_json OptionalElement(const std::optional<Element>& e) {
  return e ? nlohmann::ordered_json(*e) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json RowsJson(const Quasigroup& q) { return q.rows(); }

int CmdCheck(const std::string& path, const IdentityArgs& ids, std::ostream& out) {
  const Quasigroup q = ReadTableFile(path);
  const auto identities = ids.Resolve();
  if (identities.empty()) {
    throw Error(ErrorCode::kUnknownIdentity, "give --identity or --identity-expr");
  }
  bool all_hold = true;
  for (std::size_t i = 0; i < identities.size(); ++i) {
    const Identity& id = identities[i];
    if (identities.size() > 1) out << id.ToString() << ": ";
    if (auto ce = Counterexample(q, id)) {
      all_hold = false;
      out << "FAILS at " << FormatAssignment(id, *ce) << '\n';
    } else {
      out << "HOLDS\n";
    }
  }
  return all_hold ? kExitOk : kExitSemanticFailure;
}

struct FindArgs {
  int order = 1;
  IdentityArgs ids;
  bool up_to_iso = false;
  std::optional<std::uint64_t> limit;
  bool count_only = false;
};

int CmdFind(const FindArgs& args, const GlobalOptions& global, std::ostream& out) {
  SearchOptions opts;
  opts.order = args.order;
  opts.identities = args.ids.Resolve();
  opts.up_to_isomorphism = args.up_to_iso;
  opts.limit = args.limit;
  opts.threads = global.threads;
  opts.limits = Limits::FromEnvironment();
  if (global.max_order) {
    opts.limits.max_model_order = *global.max_order;
    opts.limits.max_model_order_4var = *global.max_order;
  }
  if (args.count_only) {
    out << Count(opts) << '\n';
    return kExitOk;
  }
  const auto models = FindAll(opts);
  if (global.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& q : models) arr.push_back(RowsJson(q));
    out << arr.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (i) out << '\n';
    WriteTable(out, models[i]);
  }
  return kExitOk;
}

int CmdAnalyze(const std::string& path, const GlobalOptions& global, std::ostream& out) {
  const Quasigroup q = ReadTableFile(path);
  out << AnalyzeReport(q, Limits::FromEnvironment(), global.threads).dump(2) << '\n';
  return kExitOk;
}

struct ConstructArgs {
  std::string group;
  bool subtraction = false;
  std::string output;
};

int CmdConstruct(const ConstructArgs& args, std::ostream& out) {
  const AbelianGroup g = GroupFromSpec(args.group);
  const Quasigroup q = args.subtraction ? SubtractionQuasigroup(g) : g.as_quasigroup();
  std::vector<std::string> comments{"group: " + args.group};
  comments.push_back(args.subtraction ? "operation: x*y = x - y" : "operation: x*y = x + y");
  if (args.output.empty()) {
    WriteTable(out, q, comments);
  } else {
    std::ofstream file(args.output);
    if (!file) throw Error(ErrorCode::kFormatError, "cannot write '" + args.output + "'");
    WriteTable(file, q, comments);
  }
  return kExitOk;
}

struct VerifyArgs {
  int max_autotopy_order = 6;
  int max_construction_order = 8;
  bool inject_mutant = false;
};

int CmdVerifyPaper(const VerifyArgs& args, const GlobalOptions& global, std::ostream& out) {
  VerifyOptions opts;
  opts.limits = Limits::FromEnvironment();
  opts.max_order = global.max_order.value_or(5);
  opts.max_autotopy_order = args.max_autotopy_order;
  opts.max_construction_order = args.max_construction_order;
  opts.inject_mutant = args.inject_mutant;
  opts.threads = global.threads;
  const VerificationReport report = VerifyAll(opts);
  if (global.format == "json") {
    out << ReportToJson(report).dump(2) << '\n';
  } else {
    PrintReport(out, report);
  }
  return report.overall() ? kExitOk : kExitSemanticFailure;
}

}  // namespace

nlohmann::ordered_json AnalyzeReport(const Quasigroup& q, const Limits& limits, int threads) {
  using json = nlohmann::ordered_json;
  json report;
  report["schema"] = 1;
  report["order"] = q.order();
  const UnitInfo units = UnitPredicates(q);
  report["units"] = {{"left", OptionalElement(units.left_unit)},
                     {"right", OptionalElement(units.right_unit)},
                     {"loop", units.is_loop}};
  report["unipotent"] = units.is_unipotent;
  report["commutative"] = units.is_commutative;
  report["associative"] = units.is_associative;

  json identities = json::object();
  for (const auto& name : BuiltinNames()) identities[name] = Holds(q, Builtin(name));
  report["identities"] = identities;

  report["nuclei"] = {{"left", Nucleus(q, NucleusSide::kLeft)},
                      {"middle", Nucleus(q, NucleusSide::kMiddle)},
                      {"right", Nucleus(q, NucleusSide::kRight)}};
  const Distributivity core = CoreDistributive(q);
  report["core_distributive"] = {{"left", core.left}, {"right", core.right}};
  report["bol"] = CheckLeftBol(q);
  report["moufang"] = CheckMoufang(q);

  report["automorphism_count"] =
      q.order() <= limits.max_automorphism_order ? json(Automorphisms(q, limits).size())
                                                 : json(nullptr);

  std::optional<AbelianGroup> group;
  try {
    group = RecoverGroup(q);
  } catch (const Error&) {
  }
  if (group) {
    report["abelian_group"] = {{"zero", group->zero()}, {"two_torsion", TwoTorsion(*group)}};
  } else {
    report["abelian_group"] = nullptr;
  }

  if (q.order() <= limits.max_autotopy_order) {
    const auto autotopies = Autotopies(q, limits, threads);
    report["autotopy_count"] = autotopies.size();
    const GAFlags ga = IsGAFrom(q, autotopies);
    report["ga"] = {{"left", ga.left_ga}, {"right", ga.right_ga}, {"ga", ga.ga}};
    const GFlags g = IsGFrom(q, autotopies);
    report["g"] = {{"left", g.left_g}, {"right", g.right_g}};
    if (group) {
      bool ok = true;
      for (const auto& t : autotopies) {
        try {
          DecomposeAutotopy(*group, t);
        } catch (const Error&) {
          ok = false;
          break;
        }
      }
      report["decomposition_ok"] = ok;
    } else {
      report["decomposition_ok"] = nullptr;
    }
  } else {
    report["autotopy_count"] = nullptr;
    report["ga"] = nullptr;
    report["g"] = nullptr;
    report["decomposition_ok"] = nullptr;
  }
  return report;
}

nlohmann::ordered_json ReportToJson(const VerificationReport& report) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"claim_id", c.claim_id},
                      {"anchor", c.anchor},
                      {"orders_tested", c.orders_tested},
                      {"status", std::string(ClaimStatusName(c.status))},
                      {"detail", c.detail}});
  }
  return {{"schema", 1}, {"claims", claims}, {"overall", report.overall()}};
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quasilab - finite quasigroup laboratory"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--max-order", global.max_order,
                 "Search bound for find; model order for verify-paper")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string check_path;
  IdentityArgs check_ids;
  auto* check = app.add_subcommand("check", "Test identities on a Cayley table");
  check->add_option("table", check_path, "Cayley table file")->required();
  AddIdentityOptions(check, check_ids);

  FindArgs find_args;
  auto* find = app.add_subcommand("find", "Enumerate quasigroups satisfying identities");
  find->add_option("--order", find_args.order, "Order of the quasigroups")->required();
  AddIdentityOptions(find, find_args.ids);
  find->add_flag("--up-to-iso", find_args.up_to_iso, "One representative per isomorphism class");
  find->add_option("--limit", find_args.limit, "Stop after this many models");
  find->add_flag("--count-only", find_args.count_only, "Print only the number of models");

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Structural report as JSON");
  analyze->add_option("table", analyze_path, "Cayley table file")->required();

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build an abelian group table");
  construct->add_option("--group", construct_args.group, "Group spec such as Z4 or Z2xZ2")
      ->required();
  construct->add_flag("--subtraction", construct_args.subtraction, "Emit x*y = x - y instead");
  construct->add_option("-o,--output", construct_args.output, "Write to a file");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-paper", "Run every claim check");
  verify->add_option("--max-autotopy-order", verify_args.max_autotopy_order)
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-construction-order", verify_args.max_construction_order)
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-mutant", verify_args.inject_mutant,
                   "Corrupt one cell of every constructed table (debug)");

  for (auto* sub : {check, find, analyze, construct, verify}) sub->fallthrough();

  std::vector<std::string> storage{"quasilab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return CmdCheck(check_path, check_ids, out);
    if (*find) return CmdFind(find_args, global, out);
    if (*analyze) return CmdAnalyze(analyze_path, global, out);
    if (*construct) return CmdConstruct(construct_args, out);
    if (*verify) return CmdVerifyPaper(verify_args, global, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace quasilab::cli
