#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "quasilab/error.hpp"
#include "quasilab/isomorphism.hpp"
#include "quasilab/model_finder.hpp"

namespace quasilab {
namespace {

SearchOptions Options(int n, std::vector<std::string> names) {
  SearchOptions o;
  o.order = n;
  for (auto& name : names) o.identities.push_back(Builtin(name));
  return o;
}

class OracleEquivalence : public ::testing::TestWithParam<std::string> {};

TEST_P(OracleEquivalence, FindAllEqualsNaiveFilter) {
  const auto id = Builtin(GetParam());
  for (int n = 1; n <= 4; ++n) {
    std::vector<Quasigroup> expected;
    for (const auto& q : testing::AllLatinSquares(n)) {
      if (testing::NaiveHolds(q, id)) expected.push_back(q);
    }
    EXPECT_EQ(FindAll(Options(n, {GetParam()})), expected) << "order " << n;
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, OracleEquivalence,
                         ::testing::ValuesIn(BuiltinNames()),
                         [](const auto& info) { return info.param; });

TEST(ModelFinder, CensusCounts) {
  const std::uint64_t expected[] = {1, 2, 12, 576, 161280};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(Count(Options(n, {})), expected[n - 1]);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(FindAll(Options(n, {})), testing::AllLatinSquares(n));
  }
}

TEST(ModelFinder, NeumannModelsAreRelabeledSubtractionTables) {
  // Each group contributes |S_4| / |Aut| distinct relabelings: 12 + 4.
  std::set<Quasigroup> expected;
  for (const char* spec : {"Z4", "Z2xZ2"}) {
    auto q = SubtractionQuasigroup(GroupFromSpec(spec));
    for (auto& img : testing::AllPermutationImages(4)) expected.insert(Relabel(q, Permutation(img)));
  }
  auto found = FindAll(Options(4, {"neumann"}));
  EXPECT_EQ(std::vector<Quasigroup>(expected.begin(), expected.end()), found);
  EXPECT_EQ(found.size(), 16u);
  EXPECT_EQ(Count(Options(5, {"neumann"})), 30u);
}

TEST(ModelFinder, UpToIsomorphism) {
  auto o = Options(4, {"neumann"});
  o.up_to_isomorphism = true;
  auto reps = FindAll(o);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_FALSE(Isomorphic(reps[0], reps[1]).has_value());
  for (const auto& r : reps) EXPECT_EQ(CanonicalForm(r), r);

  auto all = Options(4, {});
  all.up_to_isomorphism = true;
  auto classes = FindAll(all);
  EXPECT_EQ(classes.size(), 35u);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      EXPECT_FALSE(Isomorphic(classes[i], classes[j]).has_value());
    }
  }
}

TEST(ModelFinder, DeterministicAcrossThreadCounts) {
  for (const char* name : {"neumann", "medial", "unipotent"}) {
    auto one = Options(5, {name});
    auto many = one;
    many.threads = 3;
    EXPECT_EQ(FindAll(one), FindAll(many)) << name;
    one.limit = many.limit = 7;
    EXPECT_EQ(FindAll(one), FindAll(many)) << name;
  }
}

TEST(ModelFinder, LimitAndProgress) {
  auto o = Options(4, {});
  o.limit = 10;
  auto some = FindAll(o);
  EXPECT_EQ(some.size(), 10u);
  EXPECT_TRUE(std::is_sorted(some.begin(), some.end()));
  std::uint64_t calls = 0;
  o.limit.reset();
  o.progress_interval = 50;
  o.on_progress = [&](const SearchProgress& p) {
    ++calls;
    EXPECT_GT(p.nodes, 0u);
  };
  EXPECT_EQ(FindAll(o).size(), 576u);
  EXPECT_GT(calls, 0u);
}

TEST(ModelFinder, BoundsAndErrors) {
  auto code_of = [](const SearchOptions& o) {
    try {
      FindAll(o);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kEmptyList;
  };
  EXPECT_EQ(code_of(Options(0, {})), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of(Options(7, {"neumann"})), ErrorCode::kOrderTooLarge);
  EXPECT_EQ(code_of(Options(6, {"medial"})), ErrorCode::kOrderTooLarge);
  SearchOptions five;
  five.order = 2;
  five.identities.push_back(ParseIdentity("a*(b*(c*(d*e))) = e"));
  EXPECT_EQ(code_of(five), ErrorCode::kTooManyVariables);
  EXPECT_EQ(MaxSearchOrder({Builtin("neumann")}, Limits{}), 6);
  EXPECT_EQ(MaxSearchOrder({Builtin("medial")}, Limits{}), 5);
  Limits raised;
  raised.max_model_order = 40;
  EXPECT_EQ(MaxSearchOrder({}, raised), kMaxSearchOrder);
}

TEST(ModelFinder, CompareAndImplies) {
  for (int n = 1; n <= 4; ++n) {
    auto r = CompareModels(n, Builtin("neumann"), Builtin("schweizer"));
    EXPECT_TRUE(r.same_models);
    EXPECT_EQ(r.only_first + r.only_second, 0u);
  }
  auto diff = CompareModels(3, Builtin("neumann"), Builtin("commutative"));
  EXPECT_FALSE(diff.same_models);
  EXPECT_EQ(diff.common, 0u);
  EXPECT_EQ(diff.only_first, Count(Options(3, {"neumann"})));

  auto imp = ImpliesOnOrder(3, Builtin("commutative"), Builtin("associative"));
  EXPECT_FALSE(imp.holds);
  ASSERT_TRUE(imp.witness.has_value());
  EXPECT_TRUE(Holds(*imp.witness, Builtin("commutative")));
  EXPECT_FALSE(Holds(*imp.witness, Builtin("associative")));
  EXPECT_TRUE(ImpliesOnOrder(4, Builtin("eq5"), Builtin("commutative")).holds);
  EXPECT_TRUE(ImpliesOnOrder(4, Builtin("neumann"), Builtin("unipotent")).holds);
}

}  // namespace
}  // namespace quasilab
