#include "quasilab/model_finder.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "quasilab/error.hpp"
#include "quasilab/isomorphism.hpp"

namespace quasilab {
namespace {

using Mask = std::uint32_t;
constexpr Element kUnknown = -1;

// Latin square under construction. Unfixed cells hold -1 and a candidate
// mask that already excludes every symbol used in their row and column.
struct PartialTable {
  int n = 0;
  std::vector<Element> cells;
  std::vector<Mask> candidates;
  std::vector<Element> row_pos;  // row_pos[x*n+v]: column of v in row x
  std::vector<Element> col_pos;  // col_pos[y*n+v]: row of v in column y
  int unfixed = 0;

  explicit PartialTable(int order)
      : n(order),
        cells(static_cast<std::size_t>(order * order), kUnknown),
        candidates(static_cast<std::size_t>(order * order),
                   order == 32 ? ~Mask{0} : (Mask{1} << order) - 1),
        row_pos(static_cast<std::size_t>(order * order), kUnknown),
        col_pos(static_cast<std::size_t>(order * order), kUnknown),
        unfixed(order * order) {}

  Element at(Element x, Element y) const { return cells[static_cast<std::size_t>(x * n + y)]; }

  // Fixes (x, y) = v and prunes row and column masks. Returns false if some
  // unfixed cell runs out of candidates.
  bool Assign(Element x, Element y, Element v) {
    const Mask bit = Mask{1} << v;
    cells[static_cast<std::size_t>(x * n + y)] = v;
    candidates[static_cast<std::size_t>(x * n + y)] = bit;
    row_pos[static_cast<std::size_t>(x * n + v)] = y;
    col_pos[static_cast<std::size_t>(y * n + v)] = x;
    --unfixed;
    for (Element k = 0; k < n; ++k) {
      if (k != y && at(x, k) == kUnknown) {
        Mask& m = candidates[static_cast<std::size_t>(x * n + k)];
        m &= ~bit;
        if (!m) return false;
      }
      if (k != x && at(k, y) == kUnknown) {
        Mask& m = candidates[static_cast<std::size_t>(k * n + y)];
        m &= ~bit;
        if (!m) return false;
      }
    }
    return true;
  }

  // Most constrained unfixed cell, ties broken by (row, col).
  int ChooseCell() const {
    int best = -1;
    int best_count = 64;
    for (int i = 0; i < n * n; ++i) {
      if (cells[static_cast<std::size_t>(i)] != kUnknown) continue;
      const int count = std::popcount(candidates[static_cast<std::size_t>(i)]);
      if (count < best_count) {
        best = i;
        best_count = count;
        if (count <= 1) break;
      }
    }
    return best;
  }

  Element Eval(Op op, Element a, Element b) const {
    if (a == kUnknown || b == kUnknown) return kUnknown;
    switch (op) {
      case Op::kMul: return at(a, b);
      case Op::kLdiv: return row_pos[static_cast<std::size_t>(a * n + b)];
      case Op::kRdiv: return col_pos[static_cast<std::size_t>(b * n + a)];
    }
    return kUnknown;
  }
};

// Checks every ground instance of the identities whose two sides are both
// determined by fixed cells.
class GroundChecker {
 public:
  GroundChecker(const std::vector<Identity>& identities, int n) : n_(n) {
    for (const auto& id : identities) programs_.emplace_back(id);
    std::size_t regs = 0;
    for (const auto& p : programs_) regs = std::max<std::size_t>(regs, static_cast<std::size_t>(p.num_registers()));
    regs_.resize(regs);
  }

  bool Consistent(const PartialTable& t) {
    for (const auto& p : programs_) {
      if (!Consistent(t, p)) return false;
    }
    return true;
  }

 private:
  bool Consistent(const PartialTable& t, const CompiledIdentity& p) {
    const int k = p.num_vars();
    std::fill(regs_.begin(), regs_.begin() + k, 0);
    while (true) {
      auto out = regs_.begin() + k;
      for (const auto& in : p.code()) {
        *out++ = t.Eval(in.op, regs_[static_cast<std::size_t>(in.lhs)],
                        regs_[static_cast<std::size_t>(in.rhs)]);
      }
      const Element l = regs_[static_cast<std::size_t>(p.lhs_register())];
      const Element r = regs_[static_cast<std::size_t>(p.rhs_register())];
      if (l != kUnknown && r != kUnknown && l != r) return false;
      int digit = 0;
      while (digit < k && ++regs_[static_cast<std::size_t>(digit)] == n_) {
        regs_[static_cast<std::size_t>(digit)] = 0;
        ++digit;
      }
      if (digit == k) return true;
    }
  }

  int n_;
  std::vector<CompiledIdentity> programs_;
  std::vector<Element> regs_;
};

struct SubtaskResult {
  std::vector<Quasigroup> models;
  std::uint64_t count = 0;
};

class Searcher {
 public:
  Searcher(const SearchOptions& opts, bool materialize)
      : opts_(opts), checker_(opts.identities, opts.order), materialize_(materialize) {}

  SubtaskResult Run(const PartialTable& start) {
    result_ = {};
    Recurse(start);
    return std::move(result_);
  }

 private:
  bool Recurse(const PartialTable& t) {
    ++nodes_;
    if (opts_.progress_interval && opts_.on_progress && *opts_.progress_interval > 0 &&
        nodes_ % *opts_.progress_interval == 0) {
      opts_.on_progress({nodes_, result_.count});
    }
    if (t.unfixed == 0) {
      ++result_.count;
      if (materialize_) result_.models.push_back(Quasigroup::FromCells(t.n, t.cells));
      return !(opts_.limit && result_.count >= *opts_.limit);
    }
    const int cell = t.ChooseCell();
    const Element x = cell / t.n;
    const Element y = cell % t.n;
    for (Mask m = t.candidates[static_cast<std::size_t>(cell)]; m; m &= m - 1) {
      const auto v = static_cast<Element>(std::countr_zero(m));
      PartialTable next = t;
      if (!next.Assign(x, y, v) || !checker_.Consistent(next)) continue;
      if (!Recurse(next)) return false;
    }
    return true;
  }

  const SearchOptions& opts_;
  GroundChecker checker_;
  bool materialize_;
  SubtaskResult result_;
  std::uint64_t nodes_ = 0;
};

int MaxVariables(const std::vector<Identity>& identities) {
  std::size_t k = 0;
  for (const auto& id : identities) k = std::max(k, id.vars().size());
  return static_cast<int>(k);
}

void Validate(const SearchOptions& opts) {
  if (opts.order < 1) throw Error(ErrorCode::kOutOfRange, "order must be positive");
  if (MaxVariables(opts.identities) > 4) {
    throw Error(ErrorCode::kTooManyVariables, "identities may use at most 4 variables");
  }
  const int bound = MaxSearchOrder(opts.identities, opts.limits);
  if (opts.order > bound) {
    throw Error(ErrorCode::kOrderTooLarge, "order " + std::to_string(opts.order) +
                                               " exceeds search bound " + std::to_string(bound));
  }
}

// Splits the search at the first decision and runs the branches, possibly in
// parallel. Branch results come back in search order.
std::vector<SubtaskResult> RunSearch(const SearchOptions& opts, bool materialize) {
  PartialTable root(opts.order);
  GroundChecker root_checker(opts.identities, opts.order);
  std::vector<PartialTable> branches;
  if (root_checker.Consistent(root)) {
    const int cell = root.ChooseCell();
    for (Mask m = root.candidates[static_cast<std::size_t>(cell)]; m; m &= m - 1) {
      PartialTable next = root;
      if (next.Assign(cell / opts.order, cell % opts.order,
                      static_cast<Element>(std::countr_zero(m))) &&
          root_checker.Consistent(next)) {
        branches.push_back(std::move(next));
      }
    }
  }
  std::vector<SubtaskResult> results(branches.size());
  int workers = opts.threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                  : opts.threads;
  workers = std::clamp(workers, 1, std::max<int>(1, static_cast<int>(branches.size())));
  if (workers == 1) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      results[i] = Searcher(opts, materialize).Run(branches[i]);
      total += results[i].count;
      // Serial order: once the limit is met, later branches contribute nothing.
      if (opts.limit && total >= *opts.limit) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < branches.size(); i = next++) {
          results[i] = Searcher(opts, materialize).Run(branches[i]);
        }
      });
    }
  }
  return results;
}

}  // namespace

int MaxSearchOrder(const std::vector<Identity>& identities, const Limits& limits) {
  const int bound = MaxVariables(identities) >= 4 ? limits.max_model_order_4var
                                                  : limits.max_model_order;
  return std::min(bound, kMaxSearchOrder);
}

std::vector<Quasigroup> FindAll(const SearchOptions& opts) {
  Validate(opts);
  auto results = RunSearch(opts, true);
  std::vector<Quasigroup> models;
  for (auto& r : results) {
    for (auto& q : r.models) {
      if (opts.limit && models.size() >= *opts.limit) break;
      models.push_back(std::move(q));
    }
  }
  for (const auto& q : models) {
    for (const auto& id : opts.identities) {
      if (!Holds(q, id)) {
        throw std::logic_error("model finder produced a table violating " + id.ToString());
      }
    }
  }
  if (opts.up_to_isomorphism) {
    for (auto& q : models) q = CanonicalForm(q, opts.limits);
  }
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());
  return models;
}

std::uint64_t Count(const SearchOptions& opts) {
  if (opts.up_to_isomorphism) return FindAll(opts).size();
  Validate(opts);
  std::uint64_t total = 0;
  for (const auto& r : RunSearch(opts, false)) total += r.count;
  if (opts.limit) total = std::min(total, *opts.limit);
  return total;
}

EquivalenceReport CompareModels(int n, const Identity& first, const Identity& second,
                                const Limits& limits, int threads) {
  SearchOptions opts;
  opts.order = n;
  opts.limits = limits;
  opts.threads = threads;
  opts.identities = {first};
  const auto a = FindAll(opts);
  opts.identities = {second};
  const auto b = FindAll(opts);
  std::vector<Quasigroup> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  EquivalenceReport report;
  report.common = common.size();
  report.only_first = a.size() - common.size();
  report.only_second = b.size() - common.size();
  report.same_models = report.only_first == 0 && report.only_second == 0;
  return report;
}

ImplicationResult ImpliesOnOrder(int n, const Identity& hypothesis, const Identity& conclusion,
                                 const Limits& limits, int threads) {
  SearchOptions opts;
  opts.order = n;
  opts.limits = limits;
  opts.threads = threads;
  opts.identities = {hypothesis};
  for (const auto& q : FindAll(opts)) {
    if (!Holds(q, conclusion)) return {false, q};
  }
  return {true, std::nullopt};
}

}  // namespace quasilab
