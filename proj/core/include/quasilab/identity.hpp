#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasilab/quasigroup.hpp"

namespace quasilab {

enum class Op { kMul, kLdiv, kRdiv };

char OpSymbol(Op op);

// Immutable term over the quasigroup signature. Subterms are shared.
class Term {
 public:
  static Term Var(std::string name);
  static Term Apply(Op op, Term lhs, Term rhs);

  bool is_var() const noexcept { return node_->is_var; }
  // Only meaningful for variables.
  const std::string& name() const noexcept { return node_->name; }
  // Only meaningful for applications.
  Op op() const noexcept { return node_->op; }
  const Term& lhs() const { return *node_->lhs; }
  const Term& rhs() const { return *node_->rhs; }

  // Variables in first-occurrence (left to right) order.
  std::vector<std::string> variables() const;
  std::size_t size() const;

  // Fully parenthesized except at the top level, e.g. "x*((y*z)*(y*x))".
  std::string ToString() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = true;
    std::string name;
    Op op = Op::kMul;
    std::shared_ptr<const Term> lhs;
    std::shared_ptr<const Term> rhs;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::string ToString(bool top) const;

  std::shared_ptr<const Node> node_;
};

class Identity {
 public:
  Identity(Term lhs, Term rhs);

  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }
  // Distinct variables of lhs then rhs, in first-occurrence order.
  const std::vector<std::string>& vars() const noexcept { return vars_; }

  std::string ToString() const;

  friend bool operator==(const Identity& a, const Identity& b) {
    return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
  }

 private:
  Term lhs_;
  Term rhs_;
  std::vector<std::string> vars_;
};

// Grammar:
//   identity := term '=' term
//   term     := primary (('*' | '\' | '/') primary)*     (left-associative)
//   primary  := [a-z][a-z0-9]* | '(' term ')'
// All three operators share one precedence level; juxtaposition is not
// multiplication. Throws SyntaxError, or Error with kMissingEquals/kEmptySide.
Identity ParseIdentity(std::string_view text);
Term ParseTerm(std::string_view text);

using Assignment = std::map<std::string, Element, std::less<>>;

// Throws kUnboundVariable for a variable missing from `assignment`.
Element EvalTerm(const Quasigroup& q, const Term& t, const Assignment& assignment);

// Values for an identity's variables, in the order of Identity::vars().
using ValueTuple = std::vector<Element>;

bool Holds(const Quasigroup& q, const Identity& id);

// First failing assignment in odometer order. The first variable is the
// fastest-moving digit, so (x=1,y=0,z=0) precedes (x=0,y=1,z=0).
std::optional<ValueTuple> Counterexample(const Quasigroup& q, const Identity& id);

// "x=1,y=0,z=0"
std::string FormatAssignment(const Identity& id, const ValueTuple& values);

// Catalog of named identities; throws kUnknownIdentity.
Identity Builtin(std::string_view name);
std::string_view BuiltinText(std::string_view name);
const std::vector<std::string>& BuiltinNames();

// Flat evaluation program for an identity; both sides are compiled into a
// shared register file whose first vars().size() slots hold the variables.
class CompiledIdentity {
 public:
  struct Instr {
    Op op;
    int lhs;
    int rhs;
  };

  explicit CompiledIdentity(const Identity& id);

  int num_vars() const noexcept { return num_vars_; }
  int num_registers() const noexcept { return num_vars_ + static_cast<int>(code_.size()); }
  const std::vector<Instr>& code() const noexcept { return code_; }
  int lhs_register() const noexcept { return lhs_reg_; }
  int rhs_register() const noexcept { return rhs_reg_; }

  // `regs` must have num_registers() slots with the variables filled in.
  bool Check(const Quasigroup& q, std::span<Element> regs) const;

 private:
  int Compile(const Term& t, const std::vector<std::string>& vars);

  int num_vars_ = 0;
  std::vector<Instr> code_;
  int lhs_reg_ = 0;
  int rhs_reg_ = 0;
};

}  // namespace quasilab
