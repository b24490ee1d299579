#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "quasilab/error.hpp"
#include "quasilab/isomorphism.hpp"
#include "quasilab/structure.hpp"

namespace quasilab {
namespace {

std::vector<Quasigroup> NeumannInstances() {
  std::vector<Quasigroup> out;
  for (const char* spec : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6"}) {
    out.push_back(SubtractionQuasigroup(GroupFromSpec(spec)));
  }
  return out;
}

TEST(Autotopies, FrozenCounts) {
  EXPECT_EQ(Autotopies(CyclicSubtractionTable(5)).size(), 100u);
  EXPECT_EQ(Autotopies(CyclicSubtractionTable(4)).size(), 32u);
  EXPECT_EQ(Autotopies(SubtractionQuasigroup(GroupFromSpec("Z2xZ2"))).size(), 96u);
  EXPECT_EQ(Autotopies(CyclicSubtractionTable(6)).size(), 72u);
  EXPECT_THROW(Autotopies(CyclicSubtractionTable(8)), Error);
}

TEST(Autotopies, MatchNaiveTripleFilter) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& q : testing::AllLatinSquares(n)) {
      EXPECT_EQ(Autotopies(q), testing::NaiveAutotopies(q));
    }
  }
  std::mt19937 rng(41);
  auto all4 = testing::AllLatinSquares(4);
  for (int i = 0; i < 12; ++i) {
    const auto& q = all4[rng() % all4.size()];
    EXPECT_EQ(Autotopies(q), testing::NaiveAutotopies(q));
  }
  EXPECT_EQ(Autotopies(CyclicSubtractionTable(4)),
            testing::NaiveAutotopies(CyclicSubtractionTable(4)));
}

TEST(Autotopies, ThreadCountDoesNotChangeResult) {
  auto q = CyclicSubtractionTable(6);
  EXPECT_EQ(Autotopies(q, {}, 1), Autotopies(q, {}, 4));
}

TEST(Autotopies, FormAGroup) {
  std::mt19937 rng(43);
  auto all4 = testing::AllLatinSquares(4);
  for (int i = 0; i < 10; ++i) {
    const auto& q = all4[rng() % all4.size()];
    auto ts = Autotopies(q);
    std::set<Autotopy> set(ts.begin(), ts.end());
    EXPECT_TRUE(set.count(Autotopy::Identity(4)));
    for (const auto& a : ts) {
      EXPECT_TRUE(set.count(a.inverse()));
      for (const auto& b : ts) EXPECT_TRUE(set.count(a * b));
    }
  }
}

TEST(Autotopies, NeumannDecompositionIsABijection) {
  for (const auto& q : NeumannInstances()) {
    auto g = RecoverGroup(q);
    auto aut = AutomorphismGroup(g);
    auto ts = Autotopies(q);
    ASSERT_EQ(ts.size(), static_cast<std::size_t>(q.order() * q.order()) * aut.size());
    std::set<std::tuple<Element, Element, Permutation>> seen;
    for (const auto& t : ts) {
      auto d = DecomposeAutotopy(g, t);
      EXPECT_TRUE(IsAutomorphism(g, d.theta));
      EXPECT_EQ(t.alpha, g.translation(d.a) * d.theta);
      EXPECT_EQ(t.beta, g.translation(g.neg(d.b)) * d.theta);
      EXPECT_EQ(t.gamma, g.translation(g.add(d.a, d.b)) * d.theta);
      seen.emplace(d.a, d.b, d.theta);
    }
    EXPECT_EQ(seen.size(), ts.size());
    EXPECT_EQ(Automorphisms(q), aut);
  }
}

TEST(Autotopies, NonNeumannTablesDoNotDecompose) {
  EXPECT_THROW(DecomposeAutotopy(CyclicAdditionTable(3), Autotopy::Identity(3)), Error);
  auto g = Cyclic(3);
  Autotopy swap{Permutation({0, 2, 1}), Permutation::Identity(3), Permutation::Identity(3)};
  try {
    DecomposeAutotopy(g, swap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDecomposable);
  }
}

TEST(Automorphisms, MatchBruteForce) {
  std::mt19937 rng(47);
  auto all4 = testing::AllLatinSquares(4);
  for (int i = 0; i < 30; ++i) {
    const auto& q = all4[rng() % all4.size()];
    EXPECT_EQ(Automorphisms(q), testing::BruteForceAutomorphisms(q));
  }
  for (const auto& q : NeumannInstances()) {
    EXPECT_EQ(Automorphisms(q), testing::BruteForceAutomorphisms(q));
  }
}

// Pseudoautomorphisms by their definition: every (theta, c) with
// (theta, R_c theta, R_c theta) resp. (L_c theta, theta, L_c theta) an autotopy.
std::vector<PseudoautomorphismWitness> NaivePseudo(const Quasigroup& q, Side side) {
  std::vector<PseudoautomorphismWitness> out;
  for (auto& img : testing::AllPermutationImages(q.order())) {
    Permutation theta(img);
    for (Element c = 0; c < q.order(); ++c) {
      Autotopy t;
      if (side == Side::kRight) {
        auto m = q.translation(Side::kRight, c) * theta;
        t = {theta, m, m};
      } else {
        auto m = q.translation(Side::kLeft, c) * theta;
        t = {m, theta, m};
      }
      if (IsAutotopy(q, t)) out.push_back({theta, c, side});
    }
  }
  return out;
}

TEST(Pseudoautomorphisms, MatchDefinition) {
  std::vector<Quasigroup> cases = NeumannInstances();
  cases.erase(cases.begin() + 5, cases.end());
  auto all4 = testing::AllLatinSquares(4);
  std::mt19937 rng(53);
  for (int i = 0; i < 15; ++i) cases.push_back(all4[rng() % all4.size()]);
  for (const auto& q : cases) {
    for (Side side : {Side::kLeft, Side::kRight}) {
      auto fast = Pseudoautomorphisms(q, side);
      EXPECT_EQ(fast, NaivePseudo(q, side));
      for (const auto& w : fast) EXPECT_TRUE(IsAutotopy(q, w.AsAutotopy(q)));
    }
  }
}

TEST(Pseudoautomorphisms, NeumannFiltersMatchDecomposition) {
  for (const auto& q : NeumannInstances()) {
    auto g = RecoverGroup(q);
    auto ts = Autotopies(q);
    const std::size_t n2aut = static_cast<std::size_t>(q.order()) * AutomorphismGroup(g).size();
    auto right = APseudoautomorphismsFrom(ts, Side::kRight);
    auto left = APseudoautomorphismsFrom(ts, Side::kLeft);
    EXPECT_EQ(right.size(), n2aut);
    EXPECT_EQ(left.size(), n2aut);
    for (const auto& t : right) {
      auto d = DecomposeAutotopy(g, t);
      EXPECT_EQ(d.a, g.neg(g.add(d.b, d.b)));
    }
    for (const auto& t : left) EXPECT_EQ(DecomposeAutotopy(g, t).b, 0);
    EXPECT_EQ(right, APseudoautomorphisms(q, Side::kRight));
    auto ga = IsGAFrom(q, ts);
    EXPECT_TRUE(ga.left_ga && ga.right_ga && ga.ga);
    EXPECT_TRUE(ComponentTransitive(right, 3));
    EXPECT_TRUE(ComponentTransitive(left, 3));
  }
  EXPECT_THROW(ComponentTransitive({}, 1), Error);
}

TEST(Pseudoautomorphisms, GFlagsFollowExponentTwo) {
  auto z4 = IsG(CyclicSubtractionTable(4));
  EXPECT_TRUE(z4.right_g);
  EXPECT_FALSE(z4.left_g);
  auto klein = IsG(SubtractionQuasigroup(GroupFromSpec("Z2xZ2")));
  EXPECT_TRUE(klein.right_g);
  EXPECT_TRUE(klein.left_g);
  auto ga = IsGA(CyclicSubtractionTable(5));
  EXPECT_TRUE(ga.ga);
}

TEST(Nucleus, Examples) {
  auto z4 = CyclicSubtractionTable(4);
  EXPECT_EQ(Nucleus(z4, NucleusSide::kRight), (std::vector<Element>{0, 2}));
  EXPECT_EQ(Nucleus(CyclicSubtractionTable(5), NucleusSide::kRight), (std::vector<Element>{0}));
  EXPECT_EQ(Nucleus(CyclicAdditionTable(4), NucleusSide::kLeft).size(), 4u);
  EXPECT_EQ(Nucleus(CyclicAdditionTable(4), NucleusSide::kMiddle).size(), 4u);
  for (const auto& q : NeumannInstances()) {
    EXPECT_EQ(Nucleus(q, NucleusSide::kRight), TwoTorsion(RecoverGroup(q)));
  }
}

TEST(Predicates, BolMoufangAndDistributivity) {
  for (const auto& q : NeumannInstances()) {
    EXPECT_TRUE(CheckLeftBol(q));
    EXPECT_TRUE(CheckMoufang(q));
    auto d = CoreDistributive(q);
    EXPECT_TRUE(d.left && d.right);
  }
  auto loop = Quasigroup::FromRows({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}});
  EXPECT_TRUE(LeftBolViolation(loop).has_value());
  EXPECT_TRUE(MoufangViolation(loop).has_value());
  EXPECT_FALSE(IsDistributive(Magma{2, {0, 0, 1, 0}}).left);
}

TEST(Predicates, PrincipalLoopIsotopeIsALoop) {
  std::mt19937 rng(59);
  for (int i = 0; i < 30; ++i) {
    auto q = testing::RandomLatinSquare(1 + i % 6, rng);
    const int n = q.order();
    Element a = static_cast<Element>(rng() % static_cast<unsigned>(n));
    Element b = static_cast<Element>(rng() % static_cast<unsigned>(n));
    auto info = UnitPredicates(PrincipalLoopIsotope(q, a, b));
    EXPECT_TRUE(info.is_loop);
    EXPECT_EQ(info.left_unit, q(b, a));
  }
}

TEST(Isomorphism, RelabelingsAndCanonicalForms) {
  std::mt19937 rng(61);
  auto z4 = CyclicSubtractionTable(4);
  auto klein = SubtractionQuasigroup(GroupFromSpec("Z2xZ2"));
  EXPECT_FALSE(Isomorphic(z4, klein).has_value());
  EXPECT_THROW(Isomorphic(z4, CyclicSubtractionTable(3)), Error);
  for (int i = 0; i < 20; ++i) {
    auto q = testing::RandomLatinSquare(2 + i % 5, rng);
    std::vector<int> img(static_cast<std::size_t>(q.order()));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation phi(img);
    auto r = Relabel(q, phi);
    auto found = Isomorphic(q, r);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(Relabel(q, *found), r);
    EXPECT_EQ(CanonicalForm(q), CanonicalForm(r));
    EXPECT_EQ(AllIsomorphisms(q, r).size(), Automorphisms(q).size());
  }
  EXPECT_NE(CanonicalForm(z4), CanonicalForm(klein));
  EXPECT_THROW(CanonicalForm(CyclicAdditionTable(9)), Error);
}

}  // namespace
}  // namespace quasilab
