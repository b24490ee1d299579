#include "quasilab/verification.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "quasilab/abelian_group.hpp"
#include "quasilab/error.hpp"
#include "quasilab/identity.hpp"
#include "quasilab/model_finder.hpp"
#include "quasilab/structure.hpp"

namespace quasilab {

std::string_view ClaimStatusName(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::overall() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const ClaimRecord& c) { return c.status == ClaimStatus::kFail; });
}

Quasigroup FlipCell(const Quasigroup& q, Element row, Element col, Element value) {
  const int n = q.order();
  if (row < 0 || row >= n || col < 0 || col >= n || value < 0 || value >= n) {
    throw Error(ErrorCode::kOutOfRange, "cell or value outside the table");
  }
  Element other = 0;
  while (q(other, col) != value) ++other;
  std::vector<Element> cells(q.cells().begin(), q.cells().end());
  for (Element y = 0; y < n; ++y) {
    std::swap(cells[static_cast<std::size_t>(row * n + y)],
              cells[static_cast<std::size_t>(other * n + y)]);
  }
  return Quasigroup::FromCells(n, std::move(cells), q.label());
}

namespace {

std::string Name(const Quasigroup& q) {
  return q.label().value_or("order-" + std::to_string(q.order()) + " table");
}

bool IsExponentTwo(const AbelianGroup& g) {
  return static_cast<int>(TwoTorsion(g).size()) == g.order();
}

}  // namespace

std::optional<std::string> CheckRepresentation(const Quasigroup& q) {
  try {
    RecoverGroup(q);
  } catch (const Error& e) {
    return Name(q) + ": " + e.what();
  }
  return std::nullopt;
}

std::optional<std::string> CheckAutotopyStructure(const Quasigroup& q, const Limits& limits) {
  const std::string name = Name(q);
  const int n = q.order();
  std::optional<AbelianGroup> g;
  try {
    g = RecoverGroup(q);
  } catch (const Error& e) {
    return name + ": " + e.what();
  }
  const auto autotopies = Autotopies(q, limits);
  const auto group_auts = AutomorphismGroup(*g, limits);
  const std::size_t expected = static_cast<std::size_t>(n * n) * group_auts.size();
  if (autotopies.size() != expected) {
    return name + ": " + std::to_string(autotopies.size()) + " autotopies, expected " +
           std::to_string(expected);
  }
  std::set<std::tuple<Element, Element, Permutation>> seen;
  const Permutation negation = g->negation();
  for (const auto& t : autotopies) {
    NeumannAutotopyDecomposition d;
    try {
      d = DecomposeAutotopy(*g, t);
    } catch (const Error& e) {
      return name + ": " + e.what();
    }
    if (!seen.emplace(d.a, d.b, d.theta).second) {
      return name + ": two autotopies share the decomposition a=" + std::to_string(d.a) +
             ", b=" + std::to_string(d.b);
    }
    // Alternative form with quasigroup translations: (L_a, L_{-b}, L_{a*(-b)}) (-theta).
    const Permutation theta1 = negation * d.theta;
    const Element minus_b = g->neg(d.b);
    const Autotopy alternative{q.translation(Side::kLeft, d.a) * theta1,
                               q.translation(Side::kLeft, minus_b) * theta1,
                               q.translation(Side::kLeft, q(d.a, minus_b)) * theta1};
    if (!(alternative == t)) {
      return name + ": quasigroup-translation form differs for a=" + std::to_string(d.a) +
             ", b=" + std::to_string(d.b);
    }
  }
  const auto quasigroup_auts = Automorphisms(q, limits);
  if (quasigroup_auts != group_auts) {
    return name + ": automorphisms of the quasigroup (" +
           std::to_string(quasigroup_auts.size()) + ") differ from those of the group (" +
           std::to_string(group_auts.size()) + ")";
  }
  // (L_s, L_t, L_s R_t^{-1}) theta is an autotopy for all s, t and automorphisms theta.
  for (Element s = 0; s < n; ++s) {
    for (Element t = 0; t < n; ++t) {
      const Permutation ls = q.translation(Side::kLeft, s);
      const Permutation rt_inv = q.translation(Side::kRight, t).inverse();
      for (const auto& theta : quasigroup_auts) {
        const Autotopy candidate{ls * theta, q.translation(Side::kLeft, t) * theta,
                                 ls * rt_inv * theta};
        if (!IsAutotopy(q, candidate)) {
          return name + ": (L_s, L_t, L_s R_t^-1) theta is not an autotopy for s=" +
                 std::to_string(s) + ", t=" + std::to_string(t);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckNeumannStructure(const Quasigroup& q) {
  const std::string name = Name(q);
  std::optional<AbelianGroup> g;
  try {
    g = RecoverGroup(q);
  } catch (const Error& e) {
    return name + ": " + e.what();
  }
  const UnitInfo units = UnitPredicates(q);
  if (!units.is_unipotent) return name + ": not unipotent";
  if (!units.right_unit) return name + ": no right unit";
  if (units.left_unit.has_value() != IsExponentTwo(*g)) {
    return name + ": left unit present iff exponent 2 fails";
  }
  if (!Holds(q, Builtin("medial"))) return name + ": not medial";
  if (auto v = LeftBolViolation(q)) {
    return name + ": left Bol fails at x=" + std::to_string((*v)[0]) +
           ",y=" + std::to_string((*v)[1]) + ",z=" + std::to_string((*v)[2]);
  }
  if (auto v = MoufangViolation(q)) {
    return name + ": Moufang fails at x=" + std::to_string((*v)[0]) +
           ",y=" + std::to_string((*v)[1]) + ",z=" + std::to_string((*v)[2]);
  }
  const auto dist = CoreDistributive(q);
  if (!dist.left || !dist.right) return name + ": core is not distributive";
  if (Nucleus(q, NucleusSide::kRight) != TwoTorsion(*g)) {
    return name + ": right nucleus differs from the 2-torsion subgroup";
  }
  return std::nullopt;
}

namespace {

class SuiteRunner {
 public:
  explicit SuiteRunner(const VerifyOptions& opts) : opts_(opts) {}

  VerificationReport Run() {
    VerificationReport report;
    report.claims.push_back(ParastropheTransfer());
    report.claims.push_back(Eq5IsAbelianGroup());
    report.claims.push_back(Representation());
    report.claims.push_back(AutotopyForm());
    for (int item = 1; item <= 7; ++item) report.claims.push_back(NeumannProperty(item));
    report.claims.push_back(SchweizerEquivalence());
    report.claims.push_back(APseudoautomorphismConditions());
    report.claims.push_back(PseudoautomorphismUnits());
    report.claims.push_back(GPropertyNote());
    return report;
  }

 private:
  static std::vector<int> Range(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }

  const std::vector<Quasigroup>& Models(const std::string& identity, int n) {
    auto key = std::make_pair(identity, n);
    auto it = models_.find(key);
    if (it == models_.end()) {
      SearchOptions search;
      search.order = n;
      search.identities = {Builtin(identity)};
      search.threads = opts_.threads;
      search.limits = opts_.limits;
      it = models_.emplace(key, FindAll(search)).first;
    }
    return it->second;
  }

  // Subtraction quasigroups of every abelian group of order lo..hi, passed
  // through the mutation hook when it is enabled.
  std::vector<std::pair<AbelianGroup, Quasigroup>> Constructions(int lo, int hi) {
    std::vector<std::pair<AbelianGroup, Quasigroup>> out;
    for (int n = lo; n <= hi; ++n) {
      for (auto& g : EnumerateAbelianGroups(n, opts_.limits)) {
        Quasigroup q = SubtractionQuasigroup(g);
        if (opts_.inject_mutant && n > 1) q = FlipCell(q, 0, 0, (q(0, 0) + 1) % n);
        out.emplace_back(std::move(g), std::move(q));
      }
    }
    return out;
  }

  static ClaimRecord Finish(ClaimRecord r, const std::optional<std::string>& failure,
                            const std::string& summary) {
    if (r.orders_tested.empty()) {
      r.status = ClaimStatus::kSkipped;
      r.detail = "no orders in range";
    } else if (failure) {
      r.status = ClaimStatus::kFail;
      r.detail = *failure;
    } else {
      r.status = ClaimStatus::kPass;
      r.detail = summary;
    }
    return r;
  }

  ClaimRecord ParastropheTransfer() {
    ClaimRecord r{"T1", "(13)-parastrophe maps models of xy*z = y*zx onto Neumann models",
                  Range(1, opts_.max_order), {}, {}};
    std::optional<std::string> failure;
    std::size_t total = 0;
    const Identity remark = Builtin("eq5_parastrophe");
    for (int n : r.orders_tested) {
      std::vector<Quasigroup> image;
      for (const auto& q : Models("eq5", n)) image.push_back(Parastrophe(q, ParastropheSelector::Swap13()));
      std::sort(image.begin(), image.end());
      const auto& neumann = Models("neumann", n);
      total += image.size();
      if (image != neumann) {
        failure = "order " + std::to_string(n) + ": " + std::to_string(image.size()) +
                  " parastrophes vs " + std::to_string(neumann.size()) + " Neumann models";
        break;
      }
      for (const auto& p : image) {
        if (!Holds(p, remark)) {
          failure = "order " + std::to_string(n) + ": a parastrophe violates " + remark.ToString();
          break;
        }
      }
      if (failure) break;
    }
    return Finish(std::move(r), failure, std::to_string(total) + " models matched");
  }

  ClaimRecord Eq5IsAbelianGroup() {
    ClaimRecord r{"T5", "a quasigroup satisfying xy*z = y*zx is an abelian group",
                  Range(1, opts_.max_order), {}, {}};
    std::optional<std::string> failure;
    std::size_t total = 0;
    for (int n : r.orders_tested) {
      for (const auto& q : Models("eq5", n)) {
        ++total;
        const UnitInfo u = UnitPredicates(q);
        if (!u.is_loop || !u.is_commutative || !u.is_associative) {
          failure = "order " + std::to_string(n) + ": model is not an abelian group";
          break;
        }
      }
      if (failure) break;
    }
    return Finish(std::move(r), failure, std::to_string(total) + " models are abelian groups");
  }

  ClaimRecord Representation() {
    ClaimRecord r{"T6", "every Neumann quasigroup has the form x*y = x - y over an abelian group",
                  Range(1, std::max(opts_.max_order, opts_.max_construction_order)), {}, {}};
    std::optional<std::string> failure;
    std::size_t recovered = 0;
    std::size_t constructed = 0;
    for (int n = 1; n <= opts_.max_order && !failure; ++n) {
      for (const auto& q : Models("neumann", n)) {
        if ((failure = CheckRepresentation(q))) break;
        ++recovered;
      }
    }
    if (!failure) {
      const Identity neumann = Builtin("neumann");
      for (const auto& [g, q] : Constructions(1, opts_.max_construction_order)) {
        if (auto ce = Counterexample(q, neumann)) {
          failure = Name(q) + " violates the Neumann identity at " + FormatAssignment(neumann, *ce);
          break;
        }
        if (auto err = CheckRepresentation(q)) {
          failure = err;
          break;
        }
        if (RecoverGroup(q) != g) {
          failure = Name(q) + ": recovered group differs from " + g.name();
          break;
        }
        ++constructed;
      }
    }
    return Finish(std::move(r), failure,
                  std::to_string(recovered) + " models recovered, " +
                      std::to_string(constructed) + " constructions verified");
  }

  ClaimRecord AutotopyForm() {
    ClaimRecord r{"T7+C1",
                  "autotopies are (L+a, L+(-b), L+(a+b))theta; Aut of the quasigroup equals Aut of the group",
                  Range(1, opts_.max_autotopy_order), {}, {}};
    std::optional<std::string> failure;
    std::size_t instances = 0;
    for (const auto& [g, q] : Constructions(1, opts_.max_autotopy_order)) {
      if ((failure = CheckAutotopyStructure(q, opts_.limits))) break;
      ++instances;
    }
    return Finish(std::move(r), failure, std::to_string(instances) + " groups checked");
  }

  ClaimRecord NeumannProperty(int item) {
    static const char* const kAnchors[] = {
        "",
        "Neumann quasigroups are unipotent and have a right unit",
        "loops isotopic to a Neumann quasigroup are commutative groups",
        "Neumann quasigroups are medial",
        "Neumann quasigroups are left Bol",
        "Neumann quasigroups are Moufang",
        "the core of a Neumann quasigroup is distributive",
        "the right nucleus of a Neumann quasigroup is {a : a = -a}",
    };
    ClaimRecord r{"C3." + std::to_string(item), kAnchors[item],
                  Range(1, opts_.max_construction_order), {}, {}};
    std::optional<std::string> failure;
    std::size_t instances = 0;
    for (const auto& [g, q] : Constructions(1, opts_.max_construction_order)) {
      ++instances;
      const std::string name = Name(q);
      switch (item) {
        case 1: {
          const UnitInfo u = UnitPredicates(q);
          const bool left_expected = IsExponentTwo(g);
          if (!u.is_unipotent) failure = name + ": not unipotent";
          else if (!u.right_unit) failure = name + ": no right unit";
          else if (u.left_unit.has_value() != left_expected)
            failure = name + ": left unit " + (u.left_unit ? "present" : "absent") +
                      " but exponent-2 is " + (left_expected ? "true" : "false");
          break;
        }
        case 2: {
          const int n = q.order();
          for (Element a = 0; a < n && !failure; ++a) {
            for (Element b = 0; b < n && !failure; ++b) {
              const UnitInfo u = UnitPredicates(PrincipalLoopIsotope(q, a, b));
              if (!u.is_loop || !u.is_commutative || !u.is_associative) {
                failure = name + ": principal isotope (a=" + std::to_string(a) + ", b=" +
                          std::to_string(b) + ") is not a commutative group";
              }
            }
          }
          break;
        }
        case 3:
          if (auto ce = Counterexample(q, Builtin("medial")))
            failure = name + ": medial fails at " + FormatAssignment(Builtin("medial"), *ce);
          break;
        case 4:
          if (auto v = LeftBolViolation(q))
            failure = name + ": left Bol fails at x=" + std::to_string((*v)[0]) + ",y=" +
                      std::to_string((*v)[1]) + ",z=" + std::to_string((*v)[2]);
          break;
        case 5:
          if (auto v = MoufangViolation(q))
            failure = name + ": Moufang fails at x=" + std::to_string((*v)[0]) + ",y=" +
                      std::to_string((*v)[1]) + ",z=" + std::to_string((*v)[2]);
          break;
        case 6: {
          const auto d = CoreDistributive(q);
          if (!d.left || !d.right)
            failure = name + ": core fails " +
                      (d.left ? std::string("right") : d.right ? "left" : "left and right") +
                      " distributivity";
          break;
        }
        case 7: {
          const auto nucleus = Nucleus(q, NucleusSide::kRight);
          if (nucleus != TwoTorsion(g))
            failure = name + ": right nucleus has " + std::to_string(nucleus.size()) +
                      " elements, 2-torsion has " + std::to_string(TwoTorsion(g).size());
          break;
        }
        default: break;
      }
      if (failure) break;
    }
    return Finish(std::move(r), failure, std::to_string(instances) + " groups checked");
  }

  ClaimRecord SchweizerEquivalence() {
    ClaimRecord r{"T10", "Schweizer quasigroups are exactly the Neumann quasigroups",
                  Range(1, opts_.max_order), {}, {}};
    std::optional<std::string> failure;
    std::size_t total = 0;
    for (int n : r.orders_tested) {
      const auto& neumann = Models("neumann", n);
      total += neumann.size();
      for (const char* other : {"schweizer", "schweizer_swapped"}) {
        const auto& models = Models(other, n);
        if (models != neumann) {
          failure = "order " + std::to_string(n) + ": " + other + " has " +
                    std::to_string(models.size()) + " models, neumann has " +
                    std::to_string(neumann.size());
          break;
        }
      }
      if (failure) break;
    }
    return Finish(std::move(r), failure, std::to_string(total) + " models coincide");
  }

  ClaimRecord APseudoautomorphismConditions() {
    ClaimRecord r{"L1+T11",
                  "right A-pseudoautomorphisms are the autotopies with a = -2b, left ones those with b = 0; Neumann quasigroups are GA",
                  Range(3, opts_.max_autotopy_order), {}, {}};
    std::optional<std::string> failure;
    std::size_t instances = 0;
    for (const auto& [g, q] : Constructions(3, opts_.max_autotopy_order)) {
      ++instances;
      const std::string name = Name(q);
      std::optional<AbelianGroup> rg;
      try {
        rg = RecoverGroup(q);
      } catch (const Error& e) {
        failure = name + ": " + e.what();
        break;
      }
      const auto all = Autotopies(q, opts_.limits);
      for (const auto& t : all) {
        NeumannAutotopyDecomposition d;
        try {
          d = DecomposeAutotopy(*rg, t);
        } catch (const Error& e) {
          failure = name + ": " + e.what();
          break;
        }
        const bool right = t.beta == t.gamma;
        const bool left = t.alpha == t.gamma;
        const bool a_is_minus_2b = d.a == rg->neg(rg->add(d.b, d.b));
        const bool b_is_zero = d.b == rg->zero();
        if (right != a_is_minus_2b) {
          failure = name + ": beta=gamma is " + (right ? "true" : "false") +
                    " but a=-2b is " + (a_is_minus_2b ? "true" : "false");
          break;
        }
        if (left != b_is_zero) {
          failure = name + ": alpha=gamma is " + (left ? "true" : "false") +
                    " but b=0 is " + (b_is_zero ? "true" : "false");
          break;
        }
      }
      if (failure) break;
      const GAFlags ga = IsGAFrom(q, all);
      if (!ga.ga) {
        failure = name + ": not a GA-quasigroup (left " + (ga.left_ga ? "yes" : "no") +
                  ", right " + (ga.right_ga ? "yes" : "no") + ")";
        break;
      }
    }
    return Finish(std::move(r), failure, std::to_string(instances) + " groups checked");
  }

  ClaimRecord PseudoautomorphismUnits() {
    ClaimRecord r{"T4",
                  "a nontrivial right (left) pseudoautomorphism forces a right (left) unit",
                  Range(2, std::min(4, opts_.max_order)), {}, {}};
    std::optional<std::string> failure;
    std::size_t tables = 0;
    std::size_t with_right = 0;
    std::size_t with_left = 0;
    for (int n : r.orders_tested) {
      SearchOptions census;
      census.order = n;
      census.threads = opts_.threads;
      census.limits = opts_.limits;
      for (const auto& q : FindAll(census)) {
        ++tables;
        const auto all = Autotopies(q, opts_.limits);
        const UnitInfo u = UnitPredicates(q);
        auto nontrivial = [](const std::vector<PseudoautomorphismWitness>& ws) {
          return std::any_of(ws.begin(), ws.end(),
                             [](const auto& w) { return !w.theta.is_identity(); });
        };
        if (nontrivial(PseudoautomorphismsFrom(q, all, Side::kRight))) {
          ++with_right;
          if (!u.right_unit) {
            failure = "order " + std::to_string(n) +
                      ": nontrivial right pseudoautomorphism without right unit\n" +
                      FormatTableInline(q);
            break;
          }
        }
        if (nontrivial(PseudoautomorphismsFrom(q, all, Side::kLeft))) {
          ++with_left;
          if (!u.left_unit) {
            failure = "order " + std::to_string(n) +
                      ": nontrivial left pseudoautomorphism without left unit\n" +
                      FormatTableInline(q);
            break;
          }
        }
      }
      if (failure) break;
    }
    return Finish(std::move(r), failure,
                  std::to_string(tables) + " tables; " + std::to_string(with_right) +
                      " with nontrivial right, " + std::to_string(with_left) +
                      " with nontrivial left pseudoautomorphisms");
  }

  ClaimRecord GPropertyNote() {
    ClaimRecord r{"S3-G",
                  "Neumann quasigroups are G-quasigroups on exactly one side (both for exponent 2)",
                  Range(1, opts_.max_autotopy_order), {}, {}};
    std::optional<std::string> failure;
    std::ostringstream summary;
    std::size_t instances = 0;
    for (const auto& [g, q] : Constructions(1, opts_.max_autotopy_order)) {
      ++instances;
      const GFlags flags = IsG(q, opts_.limits);
      const bool exp2 = IsExponentTwo(g);
      if (!flags.right_g || flags.left_g != exp2) {
        failure = Name(q) + ": right G " + (flags.right_g ? "yes" : "no") + ", left G " +
                  (flags.left_g ? "yes" : "no");
        break;
      }
    }
    summary << instances << " groups: right G (companion form (theta, R_c theta, R_c theta)) "
            << "always; left G only for exponent 2";
    return Finish(std::move(r), failure, summary.str());
  }

  static std::string FormatTableInline(const Quasigroup& q) {
    std::string out;
    for (const auto& row : q.rows()) {
      out += "  ";
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + std::to_string(row[i]);
      out += '\n';
    }
    return out;
  }

  const VerifyOptions& opts_;
  std::map<std::pair<std::string, int>, std::vector<Quasigroup>> models_;
};

}  // namespace

VerificationReport VerifyAll(const VerifyOptions& opts) {
  if (opts.max_order < 1 || opts.max_autotopy_order < 1 || opts.max_construction_order < 1) {
    throw Error(ErrorCode::kOutOfRange, "verification bounds must be positive");
  }
  if (opts.max_order > opts.limits.max_model_order) {
    throw Error(ErrorCode::kOrderTooLarge, "--max-order " + std::to_string(opts.max_order) +
                                               " exceeds the search bound " +
                                               std::to_string(opts.limits.max_model_order));
  }
  if (opts.max_autotopy_order > opts.limits.max_autotopy_order) {
    throw Error(ErrorCode::kOrderTooLarge,
                "autotopy order " + std::to_string(opts.max_autotopy_order) +
                    " exceeds the bound " + std::to_string(opts.limits.max_autotopy_order));
  }
  if (opts.max_construction_order > opts.limits.max_automorphism_order) {
    throw Error(ErrorCode::kOrderTooLarge,
                "construction order " + std::to_string(opts.max_construction_order) +
                    " exceeds the bound " + std::to_string(opts.limits.max_automorphism_order));
  }
  return SuiteRunner(opts).Run();
}

void PrintReport(std::ostream& os, const VerificationReport& report) {
  for (const auto& c : report.claims) {
    std::string orders;
    if (!c.orders_tested.empty()) {
      orders = std::to_string(c.orders_tested.front()) + ".." +
               std::to_string(c.orders_tested.back());
    } else {
      orders = "-";
    }
    os << std::left << std::setw(8) << c.claim_id << std::setw(9)
       << ClaimStatusName(c.status) << std::setw(8) << orders << c.anchor << '\n';
    os << "        " << c.detail << '\n';
  }
  os << "overall: " << (report.overall() ? "pass" : "fail") << '\n';
}

}  // namespace quasilab
