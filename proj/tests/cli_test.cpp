#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "revbcd/cli.hpp"
#include "revbcd/designs.hpp"
#include "revbcd/metrics.hpp"
#include "revbcd/netlist_text.hpp"

namespace revbcd {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("revbcd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST(Cli, GatesListsCatalog) {
  Outcome r = run({"gates"});
  EXPECT_EQ(r.code, cli::kSuccess);
  for (const char* g : {"FG", "FRG", "TG", "NG", "PG", "HNG", "SCL"}) {
    EXPECT_NE(("\n" + r.out).find(std::string("\n") + g + " "), std::string::npos) << g;
  }
}

TEST(Cli, HelpSucceeds) {
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
  EXPECT_EQ(run({"bcd", "verify", "--help"}).code, cli::kSuccess);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"bcd", "verify", "--digits", "9"}).code, cli::kUsage);
  EXPECT_EQ(run({"bcd", "build", "--digits", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", "/nonexistent/netlist.txt"}).code, cli::kUsage);
}

TEST(Cli, BcdVerify) {
  Outcome r = run({"bcd", "verify"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.out, "200/200 cases pass\n");
}

TEST(Cli, BcdTable) {
  Outcome r = run({"bcd", "table"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("BCD adder[13] With out Fan-out"), std::string::npos);
  EXPECT_NE(r.out.find("Proposed BCD adder: 8/10/6/8 matches recomputation"), std::string::npos);
}

TEST(Cli, BcdBuildToStdout) {
  Outcome r = run({"bcd", "build"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.out, "# 1-digit reversible BCD adder\n" + emit_netlist(build_bcd_adder_digit()));
}

TEST_F(CliFiles, CheckReportsShape) {
  std::string f = write("fa.net",
                        "INPUT a b cin\nCONST z = 0\nGATE HNG a b cin z -> ga gb sum carry\n"
                        "OUTPUT sum carry\nGARBAGE ga gb\n");
  Outcome r = run({"check", f});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("ok (3 inputs, 1 constants, 1 gates, 2 outputs, 2 garbage)"),
            std::string::npos)
      << r.out;
}

TEST_F(CliFiles, CheckExitCodes) {
  Outcome parse = run({"check", write("p.net", "INPUT a\nGATE FG a\n")});
  EXPECT_EQ(parse.code, cli::kParseError);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos) << parse.err;

  Outcome dangling = run({"check", write("d.net", "INPUT a b\nGATE FG a b -> p q\nOUTPUT p\n")});
  EXPECT_EQ(dangling.code, cli::kFailed);
  EXPECT_NE(dangling.err.find("'q'"), std::string::npos) << dangling.err;

  Outcome fanout = run({"check", write("f.net", "INPUT a b\nGATE FG a b -> p q\nOUTPUT p q a\n")});
  EXPECT_EQ(fanout.code, cli::kFailed);
}

TEST_F(CliFiles, SimulatesEmittedBcdAdder) {
  std::string f = dir_ / "bcd.net";
  Outcome build = run({"bcd", "build", "-o", f});
  ASSERT_EQ(build.code, cli::kSuccess);
  Outcome r = run({"sim", f, "--in", "100110011"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("outputs: 11001\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("cout=1 s3=1 s2=0 s1=0 s0=1"), std::string::npos) << r.out;

  EXPECT_EQ(run({"sim", f, "--in", "1001"}).code, cli::kUsage);
  EXPECT_EQ(run({"sim", f, "--in", "10011001x"}).code, cli::kUsage);
}

TEST_F(CliFiles, MetricsMatchLibrary) {
  std::string f = dir_ / "bcd2.net";
  ASSERT_EQ(run({"bcd", "build", "--digits", "2", "-o", f}).code, cli::kSuccess);
  Outcome kv = run({"metrics", f, "--format", "kv"});
  EXPECT_EQ(kv.code, cli::kSuccess);
  MetricsReport expected = analyze(build_bcd_adder_n(2), default_cost_table());
  EXPECT_EQ(kv.out, to_key_value(expected));
  Outcome text = run({"metrics", f});
  EXPECT_EQ(text.out, to_text(expected));
}

TEST_F(CliFiles, MetricsWithCostFile) {
  std::string net = dir_ / "bcd.net";
  ASSERT_EQ(run({"bcd", "build", "-o", net}).code, cli::kSuccess);
  std::string costs = write("unit.txt", "FG 1\nPG 1\nHNG 1\nSCL 1\n");
  Outcome r = run({"metrics", net, "--costs", costs, "--format", "kv"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("quantum_cost=8\n"), std::string::npos);

  std::string partial = write("partial.txt", "FG 1\n");
  EXPECT_EQ(run({"metrics", net, "--costs", partial}).code, cli::kFailed);
  std::string broken = write("broken.txt", "FG one\n");
  EXPECT_EQ(run({"metrics", net, "--costs", broken}).code, cli::kParseError);
  EXPECT_EQ(run({"metrics", net, "--format", "xml"}).code, cli::kUsage);
}

TEST_F(CliFiles, TruthTable) {
  std::string f = write("fg.net", "INPUT a b\nGATE FG a b -> p q\nOUTPUT p q\n");
  Outcome r = run({"truth", f});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.out,
            "# inputs: a b | outputs: p q | garbage: 0\n"
            "00 | 00 | \n01 | 01 | \n10 | 11 | \n11 | 10 | \n");
}

TEST_F(CliFiles, TruthTooWide) {
  std::string f = dir_ / "bcd3.net";
  ASSERT_EQ(run({"bcd", "build", "--digits", "3", "-o", f}).code, cli::kSuccess);
  EXPECT_EQ(run({"truth", f}).code, cli::kFailed);
}

TEST_F(CliFiles, EmittedNetlistRoundTrips) {
  std::string first = dir_ / "a.net";
  ASSERT_EQ(run({"bcd", "build", "-o", first}).code, cli::kSuccess);
  std::ifstream in(first);
  std::stringstream text;
  text << in.rdbuf();
  Circuit c = elaborate(parse_netlist(text.str()));
  EXPECT_EQ(analyze(c, default_cost_table()), analyze(build_bcd_adder_digit(), default_cost_table()));
}

}  // namespace
}  // namespace revbcd
