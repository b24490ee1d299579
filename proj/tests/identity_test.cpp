#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quasilab/error.hpp"
#include "quasilab/identity.hpp"

namespace quasilab {
namespace {

std::size_t SyntaxPosition(std::string_view text) {
  try {
    ParseIdentity(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no syntax error for " << text;
  return std::string::npos;
}

ErrorCode ParseCode(std::string_view text) {
  try {
    ParseIdentity(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed " << text;
  return ErrorCode::kFormatError;
}

TEST(Parser, OperatorsAreLeftAssociativeAtOnePrecedence) {
  auto t = ParseTerm("x*y\\z/w");
  ASSERT_FALSE(t.is_var());
  EXPECT_EQ(t.op(), Op::kRdiv);
  EXPECT_EQ(t.lhs().op(), Op::kLdiv);
  EXPECT_EQ(t.lhs().lhs().op(), Op::kMul);
  EXPECT_EQ(t.ToString(), "((x*y)\\z)/w");
}

TEST(Parser, Errors) {
  EXPECT_EQ(ParseCode("x*y"), ErrorCode::kMissingEquals);
  EXPECT_EQ(ParseCode(" = x"), ErrorCode::kEmptySide);
  EXPECT_EQ(ParseCode("x = "), ErrorCode::kEmptySide);
  EXPECT_EQ(ParseCode("x y = z"), ErrorCode::kSyntaxError);
  EXPECT_EQ(ParseCode("x*(y*z = z"), ErrorCode::kSyntaxError);
  EXPECT_EQ(ParseIdentity("x = x").vars(), std::vector<std::string>{"x"});
  EXPECT_EQ(SyntaxPosition("x y = z"), 2u);
  EXPECT_EQ(SyntaxPosition("x = y = z"), 6u);
  EXPECT_EQ(SyntaxPosition("(x*y = z"), 5u);
  EXPECT_EQ(SyntaxPosition("x*) = z"), 2u);
  EXPECT_EQ(SyntaxPosition("x = y*"), 6u);
  EXPECT_EQ(SyntaxPosition("x = Y"), 4u);
}

TEST(Parser, BuiltinsRoundTrip) {
  for (const auto& name : BuiltinNames()) {
    const auto id = Builtin(name);
    EXPECT_EQ(id.ToString(), BuiltinText(name)) << name;
    EXPECT_EQ(ParseIdentity(id.ToString()), id);
  }
  EXPECT_THROW(Builtin("nonsense"), Error);
}

// Random terms over three variables and all three operations.
Term RandomTerm(std::mt19937& rng, int depth) {
  static const char* kVars[] = {"x", "y", "z", "u"};
  if (depth == 0 || rng() % 3 == 0) return Term::Var(kVars[rng() % 4]);
  auto op = static_cast<Op>(rng() % 3);
  auto l = RandomTerm(rng, depth - 1);
  return Term::Apply(op, l, RandomTerm(rng, depth - 1));
}

TEST(Parser, PrintParseRoundTripProperty) {
  std::mt19937 rng(19);
  for (int i = 0; i < 500; ++i) {
    Identity id(RandomTerm(rng, 4), RandomTerm(rng, 4));
    EXPECT_EQ(ParseIdentity(id.ToString()), id) << id.ToString();
    // Whitespace is insignificant.
    std::string spaced;
    for (char c : id.ToString()) {
      spaced += c;
      spaced += ' ';
    }
    EXPECT_EQ(ParseIdentity(spaced), id);
  }
}

TEST(Eval, Examples) {
  auto q = CyclicSubtractionTable(4);
  Assignment a{{"x", 1}, {"y", 3}};
  // y*x = 2, x*2 = 3.
  EXPECT_EQ(EvalTerm(q, ParseTerm("x*(y*x)"), a), 3);
  EXPECT_EQ(EvalTerm(q, ParseTerm("x\\y"), a), 2);
  EXPECT_EQ(EvalTerm(q, ParseTerm("x/y"), a), 0);
  try {
    EvalTerm(q, ParseTerm("x*w"), a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnboundVariable);
  }
}

TEST(Eval, NeumannCounterexampleOnAddition) {
  auto id = Builtin("neumann");
  EXPECT_TRUE(Holds(CyclicSubtractionTable(3), id));
  auto ce = Counterexample(CyclicAdditionTable(3), id);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(FormatAssignment(id, *ce), "x=1,y=0,z=0");
  EXPECT_FALSE(Counterexample(CyclicSubtractionTable(5), id).has_value());
}

TEST(Eval, VariablesInFirstOccurrenceOrder) {
  EXPECT_EQ(Builtin("neumann").vars(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(Builtin("schweizer").vars(), (std::vector<std::string>{"y", "z", "x"}));
  EXPECT_EQ(ParseIdentity("x*x = y*y").vars().size(), 2u);
}

TEST(Eval, CompiledAgreesWithRecursiveEvaluation) {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    Identity id(RandomTerm(rng, 3), RandomTerm(rng, 3));
    auto q = testing::RandomLatinSquare(1 + i % 4, rng);
    EXPECT_EQ(Holds(q, id), testing::NaiveHolds(q, id)) << id.ToString();
  }
}

TEST(Eval, RenamingVariablesPreservesTruth) {
  const auto original = Builtin("neumann");
  const auto renamed = ParseIdentity("a*((b*c)*(b*a)) = c");
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    auto q = testing::RandomLatinSquare(1 + i % 5, rng);
    EXPECT_EQ(Holds(q, original), Holds(q, renamed));
  }
}

TEST(Eval, UnipotentMatchesDiagonalCheck) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& q : testing::AllLatinSquares(n)) {
      bool diagonal_constant = true;
      for (Element x = 0; x < n; ++x) diagonal_constant &= q(x, x) == q(0, 0);
      EXPECT_EQ(Holds(q, Builtin("unipotent")), diagonal_constant);
    }
  }
}

}  // namespace
}  // namespace quasilab
