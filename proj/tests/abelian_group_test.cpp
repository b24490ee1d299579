#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quasilab/abelian_group.hpp"
#include "quasilab/error.hpp"

namespace quasilab {
namespace {

TEST(AbelianGroup, Constructions) {
  auto z4 = Cyclic(4);
  EXPECT_EQ(z4.name(), "Z4");
  EXPECT_EQ(z4.add(3, 2), 1);
  EXPECT_EQ(z4.neg(1), 3);
  EXPECT_EQ(z4.element_order(2), 2);
  EXPECT_EQ(Cyclic(1).name(), "Z1");
  EXPECT_THROW(Cyclic(0), Error);

  auto g = DirectProduct({Cyclic(4), Cyclic(2)});
  EXPECT_EQ(g.name(), "Z4xZ2");
  EXPECT_EQ(g.order(), 8);
  // (1,1) + (3,1) = (0,0) with element (a,b) encoded as 2a+b.
  EXPECT_EQ(g.add(3, 7), 0);
  EXPECT_EQ(g.element_order(3), 4);
  EXPECT_EQ(GroupFromSpec("z2XZ2"), DirectProduct({Cyclic(2), Cyclic(2)}));
  EXPECT_THROW(DirectProduct({Cyclic(16), Cyclic(17)}), Error);
}

TEST(AbelianGroup, SpecErrors) {
  for (const char* bad : {"Z0", "", "Z", "Z2x", "Q4", "Z2xx2", "Z-1"}) {
    try {
      GroupFromSpec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadGroupSpec) << bad;
    }
  }
}

TEST(AbelianGroup, ConstructorRejectsNonGroups) {
  // Z3 subtraction is Latin but not associative.
  auto sub = CyclicSubtractionTable(3);
  std::vector<Element> cells(sub.cells().begin(), sub.cells().end());
  EXPECT_THROW(AbelianGroup(3, cells, 0), Error);
  // A non-abelian group (S3 by image sequences) must be rejected too.
  std::vector<Permutation> s3;
  for (auto& img : testing::AllPermutationImages(3)) s3.emplace_back(img);
  std::vector<Element> table;
  for (auto& a : s3) {
    for (auto& b : s3) {
      table.push_back(static_cast<Element>(std::find(s3.begin(), s3.end(), a * b) - s3.begin()));
    }
  }
  try {
    AbelianGroup(6, table, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAbelianGroup);
  }
}

TEST(AbelianGroup, EnumerationMatchesBruteForceClassCount) {
  EXPECT_EQ(EnumerateAbelianGroups(6).size(), 1u);
  EXPECT_EQ(testing::BruteForceAbelianClassCount(6), 1);
  EXPECT_EQ(EnumerateAbelianGroups(8).size(), 3u);
  EXPECT_EQ(testing::BruteForceAbelianClassCount(8), 3);
  EXPECT_EQ(testing::BruteForceAbelianClassCount(4), 2);
  std::vector<std::string> names;
  for (auto& g : EnumerateAbelianGroups(8)) names.push_back(g.name());
  EXPECT_EQ(names, (std::vector<std::string>{"Z8", "Z4xZ2", "Z2xZ2xZ2"}));
}

TEST(AbelianGroup, EnumerationCountsByPartitions) {
  // Number of abelian groups of order n for n = 1..32.
  const int expected[] = {1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5,
                          1, 2, 1, 2, 1, 1, 1, 3, 2, 1, 3, 2, 1, 1, 1, 7};
  for (int n = 1; n <= 32; ++n) {
    auto gs = EnumerateAbelianGroups(n);
    EXPECT_EQ(static_cast<int>(gs.size()), expected[n - 1]) << n;
    for (auto& g : gs) EXPECT_EQ(g.order(), n);
  }
  EXPECT_THROW(EnumerateAbelianGroups(257), Error);
}

TEST(AbelianGroup, AutomorphismsAgainstBruteForce) {
  EXPECT_EQ(AutomorphismGroup(Cyclic(5)).size(), 4u);
  EXPECT_EQ(AutomorphismGroup(GroupFromSpec("Z2xZ2")).size(), 6u);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(static_cast<int>(AutomorphismGroup(Cyclic(n)).size()), testing::EulerPhi(n)) << n;
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : EnumerateAbelianGroups(n)) {
      auto fast = AutomorphismGroup(g);
      EXPECT_EQ(fast, testing::BruteForceAutomorphisms(g)) << g.name();
      for (auto& t : fast) EXPECT_TRUE(IsAutomorphism(g, t));
    }
  }
  EXPECT_EQ(AutomorphismGroup(GroupFromSpec("Z2xZ2xZ2")).size(), 168u);
  EXPECT_THROW(AutomorphismGroup(Cyclic(17)), Error);
}

TEST(AbelianGroup, SubtractionRoundTrip) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : EnumerateAbelianGroups(n)) {
      auto q = SubtractionQuasigroup(g);
      EXPECT_EQ(q.label(), g.name() + " subtraction");
      auto back = RecoverGroup(q);
      EXPECT_EQ(back.zero(), g.zero());
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) EXPECT_EQ(back.add(a, b), g.add(a, b));
      }
    }
  }
}

TEST(AbelianGroup, RecoverErrors) {
  auto code_of = [](const Quasigroup& q) {
    try {
      RecoverGroup(q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kEmptyList;
  };
  // Addition of Z3 has right unit 0 but is not of the form x - y.
  EXPECT_EQ(code_of(CyclicAdditionTable(3)), ErrorCode::kRepresentationMismatch);
  // Search the order-3 squares for one without a right unit.
  bool saw_no_unit = false;
  for (const auto& q : testing::AllLatinSquares(3)) {
    if (!UnitPredicates(q).right_unit) {
      EXPECT_EQ(code_of(q), ErrorCode::kNoRightUnit);
      saw_no_unit = true;
    }
  }
  EXPECT_TRUE(saw_no_unit);
  // A non-associative loop: the derived operation is the table itself.
  auto loop = Quasigroup::FromRows({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}});
  EXPECT_EQ(code_of(loop), ErrorCode::kNotAbelianGroup);
}

TEST(AbelianGroup, TwoTorsionAndCore) {
  EXPECT_EQ(TwoTorsion(Cyclic(4)), (std::vector<Element>{0, 2}));
  EXPECT_EQ(TwoTorsion(Cyclic(5)), (std::vector<Element>{0}));
  EXPECT_EQ(TwoTorsion(GroupFromSpec("Z2xZ2")).size(), 4u);
  // Core of x - y is x*(y*x) = 2x - y; not Latin over Z4, Latin over Z5.
  auto core4 = CoreGroupoid(CyclicSubtractionTable(4));
  EXPECT_FALSE(core4.is_latin());
  EXPECT_EQ(core4(1, 0), 2);
  EXPECT_TRUE(CoreGroupoid(CyclicSubtractionTable(5)).is_latin());
}

}  // namespace
}  // namespace quasilab
