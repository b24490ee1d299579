#include "quasilab/identity.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "quasilab/error.hpp"

namespace quasilab {

char OpSymbol(Op op) {
  switch (op) {
    case Op::kMul: return '*';
    case Op::kLdiv: return '\\';
    case Op::kRdiv: return '/';
  }
  return '?';
}

// --- Term -------------------------------------------------------------------

Term Term::Var(std::string name) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::Apply(Op op, Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->op = op;
  node->lhs = std::make_shared<const Term>(std::move(lhs));
  node->rhs = std::make_shared<const Term>(std::move(rhs));
  return Term(std::move(node));
}

namespace {

void CollectVariables(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  CollectVariables(t.lhs(), out);
  CollectVariables(t.rhs(), out);
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  CollectVariables(*this, out);
  return out;
}

std::size_t Term::size() const {
  return is_var() ? 1 : 1 + lhs().size() + rhs().size();
}

std::string Term::ToString() const { return ToString(true); }

std::string Term::ToString(bool top) const {
  if (is_var()) return name();
  std::string s = lhs().ToString(false) + OpSymbol(op()) + rhs().ToString(false);
  return top ? s : "(" + s + ")";
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.name() == b.name();
  return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

Identity::Identity(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  CollectVariables(lhs_, vars_);
  CollectVariables(rhs_, vars_);
}

std::string Identity::ToString() const {
  return lhs_.ToString() + " = " + rhs_.ToString();
}

// --- Parser -----------------------------------------------------------------

namespace {

class TermParser {
 public:
  // Parses text[begin, end); positions reported are offsets into `text`.
  TermParser(std::string_view text, std::size_t begin, std::size_t end)
      : text_(text), pos_(begin), end_(end) {}

  Term ParseSide() {
    Term t = ParseExpr();
    SkipSpace();
    if (pos_ != end_) {
      if (text_[pos_] == ')') throw SyntaxError(pos_, "", "unbalanced ')'");
      throw SyntaxError(pos_, "'*', '\\' or '/'",
                        std::string("unexpected '") + text_[pos_] + "'");
    }
    return t;
  }

 private:
  void SkipSpace() {
    while (pos_ < end_ && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                           text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::optional<Op> PeekOp() {
    SkipSpace();
    if (pos_ == end_) return std::nullopt;
    switch (text_[pos_]) {
      case '*': return Op::kMul;
      case '\\': return Op::kLdiv;
      case '/': return Op::kRdiv;
      default: return std::nullopt;
    }
  }

  Term ParseExpr() {
    Term acc = ParsePrimary();
    while (auto op = PeekOp()) {
      ++pos_;
      acc = Term::Apply(*op, std::move(acc), ParsePrimary());
    }
    return acc;
  }

  Term ParsePrimary() {
    SkipSpace();
    if (pos_ == end_) throw SyntaxError(pos_, "variable or '('", "unexpected end of term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term inner = ParseExpr();
      SkipSpace();
      if (pos_ == end_ || text_[pos_] != ')') {
        throw SyntaxError(pos_, "')'", pos_ == end_ ? "unbalanced parenthesis"
                                                    : std::string("unexpected '") +
                                                          text_[pos_] + "'");
      }
      ++pos_;
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < end_ && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                             (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
        ++pos_;
      }
      return Term::Var(std::string(text_.substr(start, pos_ - start)));
    }
    throw SyntaxError(pos_, "variable or '('", std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
};

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

}  // namespace

Term ParseTerm(std::string_view text) {
  if (IsBlank(text)) throw Error(ErrorCode::kEmptySide, "empty term");
  return TermParser(text, 0, text.size()).ParseSide();
}

Identity ParseIdentity(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::kMissingEquals, "no '=' in \"" + std::string(text) + "\"");
  }
  if (const std::size_t second = text.find('=', eq + 1); second != std::string_view::npos) {
    throw SyntaxError(second, "", "second '='");
  }
  if (IsBlank(text.substr(0, eq))) {
    throw Error(ErrorCode::kEmptySide, "left side of '=' is empty");
  }
  if (IsBlank(text.substr(eq + 1))) {
    throw Error(ErrorCode::kEmptySide, "right side of '=' is empty");
  }
  Term lhs = TermParser(text, 0, eq).ParseSide();
  Term rhs = TermParser(text, eq + 1, text.size()).ParseSide();
  return Identity(std::move(lhs), std::move(rhs));
}

// --- Evaluation -------------------------------------------------------------

Element EvalTerm(const Quasigroup& q, const Term& t, const Assignment& assignment) {
  if (t.is_var()) {
    auto it = assignment.find(t.name());
    if (it == assignment.end()) {
      throw Error(ErrorCode::kUnboundVariable, "variable '" + t.name() + "' is unassigned");
    }
    return it->second;
  }
  const Element a = EvalTerm(q, t.lhs(), assignment);
  const Element b = EvalTerm(q, t.rhs(), assignment);
  switch (t.op()) {
    case Op::kMul: return q.mul(a, b);
    case Op::kLdiv: return q.ldiv(a, b);
    case Op::kRdiv: return q.rdiv(a, b);
  }
  return 0;
}

CompiledIdentity::CompiledIdentity(const Identity& id)
    : num_vars_(static_cast<int>(id.vars().size())) {
  lhs_reg_ = Compile(id.lhs(), id.vars());
  rhs_reg_ = Compile(id.rhs(), id.vars());
}

int CompiledIdentity::Compile(const Term& t, const std::vector<std::string>& vars) {
  if (t.is_var()) {
    return static_cast<int>(std::find(vars.begin(), vars.end(), t.name()) - vars.begin());
  }
  const int a = Compile(t.lhs(), vars);
  const int b = Compile(t.rhs(), vars);
  code_.push_back({t.op(), a, b});
  return num_vars_ + static_cast<int>(code_.size()) - 1;
}

bool CompiledIdentity::Check(const Quasigroup& q, std::span<Element> regs) const {
  auto out = regs.begin() + num_vars_;
  for (const Instr& in : code_) {
    const Element a = regs[static_cast<std::size_t>(in.lhs)];
    const Element b = regs[static_cast<std::size_t>(in.rhs)];
    switch (in.op) {
      case Op::kMul: *out = q(a, b); break;
      case Op::kLdiv: *out = q.ldiv_unchecked(a, b); break;
      case Op::kRdiv: *out = q.rdiv_unchecked(a, b); break;
    }
    ++out;
  }
  return regs[static_cast<std::size_t>(lhs_reg_)] == regs[static_cast<std::size_t>(rhs_reg_)];
}

std::optional<ValueTuple> Counterexample(const Quasigroup& q, const Identity& id) {
  const CompiledIdentity prog(id);
  const int n = q.order();
  const int k = prog.num_vars();
  std::vector<Element> regs(static_cast<std::size_t>(prog.num_registers()), 0);
  while (true) {
    if (!prog.Check(q, regs)) {
      return ValueTuple(regs.begin(), regs.begin() + k);
    }
    // Odometer step, first variable fastest.
    int digit = 0;
    while (digit < k && ++regs[static_cast<std::size_t>(digit)] == n) {
      regs[static_cast<std::size_t>(digit)] = 0;
      ++digit;
    }
    if (digit == k) return std::nullopt;
  }
}

bool Holds(const Quasigroup& q, const Identity& id) { return !Counterexample(q, id); }

std::string FormatAssignment(const Identity& id, const ValueTuple& values) {
  std::string out;
  for (std::size_t i = 0; i < id.vars().size() && i < values.size(); ++i) {
    if (i) out += ',';
    out += id.vars()[i] + "=" + std::to_string(values[i]);
  }
  return out;
}

// --- Catalog ----------------------------------------------------------------

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 9> kCatalog{{
    {"neumann", "x*((y*z)*(y*x)) = z"},
    {"schweizer", "(y*z)*(y*x) = x*z"},
    {"eq5", "(x*y)*z = y*(z*x)"},
    {"eq5_parastrophe", "(x*(y*z))*(x*y) = z"},
    {"medial", "(x*y)*(u*v) = (x*u)*(y*v)"},
    {"commutative", "x*y = y*x"},
    {"associative", "(x*y)*z = x*(y*z)"},
    {"unipotent", "x*x = y*y"},
    {"schweizer_swapped", "(y*x)*(y*z) = z*x"},
}};

}  // namespace

std::string_view BuiltinText(std::string_view name) {
  for (const auto& [key, text] : kCatalog) {
    if (key == name) return text;
  }
  throw Error(ErrorCode::kUnknownIdentity, "no builtin identity named '" +
                                               std::string(name) + "'");
}

Identity Builtin(std::string_view name) { return ParseIdentity(BuiltinText(name)); }

const std::vector<std::string>& BuiltinNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kCatalog) out.emplace_back(entry.first);
    return out;
  }();
  return names;
}

}  // namespace quasilab
