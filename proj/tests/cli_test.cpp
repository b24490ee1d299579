#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "quasilab/table_io.hpp"

namespace quasilab::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("quasilab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const Quasigroup& q) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << FormatTable(q);
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ConstructWritesCommentedTable) {
  auto r = Call({"construct", "--group", "Z4", "--subtraction"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "# group: Z4\n# operation: x*y = x - y\norder 4\n"
            "0 3 2 1\n1 0 3 2\n2 1 0 3\n3 2 1 0\n");
  auto path = (dir_ / "z4.txt").string();
  EXPECT_EQ(Call({"construct", "--group", "Z4", "--subtraction", "-o", path}).code, kExitOk);
  EXPECT_EQ(ReadTableFile(path), CyclicSubtractionTable(4));
  EXPECT_EQ(Call({"construct", "--group", "Z0"}).code, kExitUsage);
}

TEST_F(CliTest, CheckReportsCounterexample) {
  auto sub = Write("sub.txt", CyclicSubtractionTable(4));
  auto add = Write("add.txt", CyclicAdditionTable(3));
  auto r = Call({"check", sub, "--identity", "neumann"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "HOLDS\n");
  r = Call({"check", add, "--identity", "neumann"});
  EXPECT_EQ(r.code, kExitSemanticFailure);
  EXPECT_EQ(r.out, "FAILS at x=1,y=0,z=0\n");
  r = Call({"check", add, "--identity", "commutative", "--identity-expr", "x*y = y*x"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "x*y = y*x: HOLDS\nx*y = y*x: HOLDS\n");
  EXPECT_EQ(Call({"check", add, "--identity-expr", "x y = z"}).code, kExitUsage);
  EXPECT_EQ(Call({"check", (dir_ / "missing.txt").string(), "--identity", "neumann"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"check", add}).code, kExitUsage);
}

TEST_F(CliTest, FindOutputs) {
  auto r = Call({"find", "--order", "4", "--identity", "neumann", "--count-only"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "16\n");
  EXPECT_EQ(Call({"find", "--order", "4", "--count-only"}).out, "576\n");
  r = Call({"find", "--order", "4", "--identity", "neumann", "--up-to-iso"});
  EXPECT_EQ(ParseTables(r.out).size(), 2u);
  r = Call({"--format", "json", "find", "--order", "2"});
  EXPECT_EQ(r.out, "[[[0,1],[1,0]],[[1,0],[0,1]]]\n");
  EXPECT_EQ(Call({"find", "--order", "99", "--identity", "neumann"}).code, kExitUsage);
  EXPECT_EQ(Call({"find", "--order", "7", "--identity", "neumann"}).code, kExitUsage);
  EXPECT_EQ(Call({"--max-order", "7", "find", "--order", "3", "--count-only"}).out, "12\n");
  EXPECT_EQ(Call({"find"}).code, kExitUsage);
  EXPECT_EQ(Call({"find", "--order", "3", "--identity", "bogus"}).code, kExitUsage);
}

TEST_F(CliTest, AnalyzeJson) {
  auto path = Write("z4.txt", CyclicSubtractionTable(4));
  auto r = Call({"analyze", path});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["units"]["right"], 0);
  EXPECT_TRUE(j["units"]["left"].is_null());
  EXPECT_EQ(j["autotopy_count"], 32);
  EXPECT_EQ(j["automorphism_count"], 2);
  EXPECT_EQ(j["nuclei"]["right"], (std::vector<int>{0, 2}));
  EXPECT_EQ(j["abelian_group"]["two_torsion"], (std::vector<int>{0, 2}));
  EXPECT_TRUE(j["identities"]["neumann"].get<bool>());
  EXPECT_TRUE(j["ga"]["ga"].get<bool>());
  EXPECT_FALSE(j["g"]["left"].get<bool>());
  EXPECT_TRUE(j["decomposition_ok"].get<bool>());

  auto add = Write("add.txt", CyclicAdditionTable(3));
  j = nlohmann::json::parse(Call({"analyze", add}).out);
  EXPECT_TRUE(j["abelian_group"].is_null());
  EXPECT_TRUE(j["decomposition_ok"].is_null());
}

TEST_F(CliTest, VerifyPaper) {
  auto first = Call({"verify-paper"});
  EXPECT_EQ(first.code, kExitOk) << first.out;
  EXPECT_EQ(Call({"verify-paper"}).out, first.out);
  EXPECT_EQ(Call({"--threads", "3", "verify-paper"}).out, first.out);

  auto trivial = Call({"--max-order", "1", "verify-paper"});
  EXPECT_EQ(trivial.code, kExitOk);
  EXPECT_NE(trivial.out.find("skipped"), std::string::npos);

  auto mutant = Call({"verify-paper", "--inject-mutant"});
  EXPECT_EQ(mutant.code, kExitSemanticFailure);

  auto j = nlohmann::json::parse(Call({"--format", "json", "verify-paper"}).out);
  EXPECT_TRUE(j["overall"].get<bool>());
  for (const auto& c : j["claims"]) EXPECT_EQ(c["status"], "pass") << c.dump();
  EXPECT_EQ(Call({"verify-paper", "--max-autotopy-order", "9"}).code, kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
  EXPECT_EQ(Call({"--format", "xml", "find", "--order", "2"}).code, kExitUsage);
}

}  // namespace
}  // namespace quasilab::cli
