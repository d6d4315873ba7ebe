#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace cfc;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::path(testing::TempDir()) / "cfc_cli";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write(const std::string& name, const std::string& text) {
  std::string p = tmp(name);
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ExactOnBull) {
  std::string g = tmp("bull.g");
  ASSERT_EQ(run({"gen", "--family", "named:bull", "--out", g}).code, 0);
  auto r = run({"exact", "--mode", "cn", "--graph", g, "--max-k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  auto u = run({"exact", "--mode", "cn", "--graph", g, "--max-k", "1"});
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(u.out, "UNKNOWN(>1)\n");
  auto c = run({"exact", "--mode", "cn", "--graph", g, "--max-k", "3", "--ceiling", "4"});
  EXPECT_EQ(c.code, 3);
}

TEST(Cli, VerifyRoundTrip) {
  std::string g = write("p3.g", "3 2\n0 1\n1 2\n");
  std::string good = write("good.c", "1 2 0\n");
  std::string bad = write("bad.c", "1 0 1\n");
  auto r = run({"verify", "--mode", "cn", "--graph", g, "--coloring", good});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "VALID\n");
  auto s = run({"verify", "--mode", "on", "--graph", g, "--coloring", bad});
  EXPECT_EQ(s.code, 1);
  EXPECT_EQ(s.out, "INVALID witness=0\n");
}

TEST(Cli, ColorKneser) {
  auto r = run({"color", "--class", "kneser-on", "--n", "7", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("colors_used=4"), std::string::npos);
  EXPECT_NE(r.out.find("valid=true"), std::string::npos);
  auto big = run({"color", "--class", "kneser-on", "--n", "40", "--k", "10"});
  EXPECT_EQ(big.code, 3);
  auto rule = run({"color", "--class", "kneser-cn", "--n", "40", "--k", "10", "--rule"});
  EXPECT_EQ(rule.code, 0);
  EXPECT_NE(rule.out.find("palette=10"), std::string::npos);
}

TEST(Cli, ColorWritesVerifiedFile) {
  std::string in = tmp("lb.iv"), out = tmp("lb.c");
  ASSERT_EQ(run({"gen", "--family", "named:interval-lb", "--scene", "--out", in}).code, 0);
  auto r = run({"color", "--class", "interval-on", "--input", in, "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("valid=true"), std::string::npos);
  std::string g = tmp("lb.g");
  ASSERT_EQ(run({"gen", "--family", "named:interval-lb", "--out", g}).code, 0);
  EXPECT_EQ(run({"verify", "--mode", "on", "--graph", g, "--coloring", out}).code, 0);
}

TEST(Cli, ColorSplitNeedsClique) {
  std::string g = tmp("split.g"), k = tmp("split.k");
  ASSERT_EQ(run({"gen", "--family", "random:split-graph", "--n", "9", "--seed", "3", "--out", g,
                 "--clique-out", k}).code,
            0);
  auto r = run({"color", "--class", "split-cn", "--input", g, "--clique", k});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("valid=true"), std::string::npos);
  EXPECT_EQ(run({"color", "--class", "split-cn", "--input", g}).code, 2);
}

TEST(Cli, ColorAllClassesFromGeneratedInputs) {
  std::string seq = tmp("seq.txt"), cog = tmp("cog.txt"), iv = tmp("iv.txt"), uiv = tmp("uiv.txt"),
              sq = tmp("sq.txt"), dk = tmp("dk.txt"), bl = tmp("bl.g"), nt = tmp("nt.txt");
  ASSERT_EQ(run({"gen", "--family", "random:extension-seq", "--n", "10", "--seed", "1", "--out", seq}).code, 0);
  ASSERT_EQ(run({"gen", "--family", "random:extension-seq", "--n", "10", "--seed", "1", "--ops", "TF", "--out",
                 cog}).code,
            0);
  ASSERT_EQ(run({"gen", "--family", "random:extension-seq", "--n", "10", "--seed", "1", "--ops", "PF", "--out",
                 nt}).code,
            0);
  ASSERT_EQ(run({"gen", "--family", "random:intervals", "--n", "12", "--seed", "2", "--out", iv}).code, 0);
  ASSERT_EQ(run({"gen", "--family", "random:unit-intervals", "--n", "12", "--seed", "2", "--out", uiv}).code, 0);
  ASSERT_EQ(run({"gen", "--family", "random:points-square", "--n", "20", "--seed", "2", "--out", sq}).code, 0);
  ASSERT_EQ(run({"gen", "--family", "random:points-disk", "--n", "20", "--seed", "2", "--out", dk}).code, 0);
  ASSERT_EQ(run({"gen", "--family", "random:block-graph", "--n", "15", "--seed", "2", "--out", bl}).code, 0);
  std::vector<std::vector<std::string>> calls = {
      {"--class", "dh-cn", "--input", seq},
      {"--class", "dh-restricted", "--missing", "P", "--input", cog},
      {"--class", "dh-restricted", "--missing", "T", "--input", nt},
      {"--class", "cograph-on", "--input", cog},
      {"--class", "block-on", "--input", bl},
      {"--class", "interval-on", "--input", iv},
      {"--class", "proper-interval-on", "--input", uiv},
      {"--class", "interval-cn", "--input", iv},
      {"--class", "kneser-cn", "--n", "9", "--k", "3"},
      {"--class", "unit-square-on", "--input", sq},
      {"--class", "unit-disk-on", "--input", dk},
  };
  for (auto args : calls) {
    args.insert(args.begin(), "color");
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[2] << ": " << r.err;
    EXPECT_NE(r.out.find("valid=true"), std::string::npos) << args[2];
  }
  // Forbidden operation present.
  EXPECT_EQ(run({"color", "--class", "cograph-on", "--input", seq}).code, 2);
}

TEST(Cli, DpOnTriangle) {
  std::string e = write("k3.we", "j(1,2, j(1,2, u(r(2,1, j(1,2, u(v(0,1), v(1,2)))), v(2,2))))\n");
  auto yes = run({"dp", "--expr", e, "--k", "2", "--mode", "on"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "YES\n");
  auto no = run({"dp", "--expr", e, "--k", "1", "--mode", "on"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "NO\n");
  std::string bad = write("bad.we", "j(1,2, u(v(0,1), \n x(1)))");
  auto err = run({"dp", "--expr", bad, "--k", "1", "--mode", "on"});
  EXPECT_EQ(err.code, 2);
  EXPECT_NE(err.err.find("line 2"), std::string::npos);
}

TEST(Cli, GenExpressionAndDp) {
  std::string e = tmp("gk3.we");
  ASSERT_EQ(run({"gen", "--family", "gk-cn", "--k", "3", "--expr", "--out", e}).code, 0);
  EXPECT_EQ(run({"dp", "--expr", e, "--k", "2", "--mode", "cn", "--full"}).out, "NO\n");
  std::string c = tmp("cot.we");
  ASSERT_EQ(run({"gen", "--family", "random:cotree", "--n", "7", "--seed", "5", "--out", c}).code, 0);
  EXPECT_NO_THROW(load(c, read_wexpr));
}

TEST(Cli, GenRequiresSeed) {
  auto r = run({"gen", "--family", "random:intervals", "--n", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
  auto a = run({"gen", "--family", "random:intervals", "--n", "5", "--seed", "42"});
  auto b = run({"gen", "--family", "random:intervals", "--n", "5", "--seed", "42"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenSplitReductionRoundTrip) {
  std::string g = write("in.g", "3 2\n0 1\n1 2\n");
  std::string out = tmp("red.g"), k = tmp("red.k");
  ASSERT_EQ(run({"gen", "--family", "split-reduction", "--graph", g, "--out", out, "--clique-out", k}).code, 0);
  Graph red = load(out, read_graph);
  EXPECT_EQ(red.n(), 19u);
  EXPECT_EQ(slurp(k), "0 1 2 3 4\n");
}

TEST(Cli, Pid) {
  std::string g = write("p3pid.g", "3 2\n0 1\n1 2\n");
  auto r = run({"pid", "--graph", g});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{1}\n");
  std::string c4 = write("c4.g", "4 4\n0 1\n1 2\n2 3\n0 3\n");
  EXPECT_EQ(run({"pid", "--graph", c4}).out, "NONE\n");
  std::string iv = tmp("bull.iv");
  ASSERT_EQ(run({"gen", "--family", "named:bull", "--scene", "--out", iv}).code, 0);
  auto n = run({"pid", "--intervals", iv});
  EXPECT_EQ(n.code, 1);
  EXPECT_EQ(n.out, "NONE\n");
}

TEST(Cli, Bench) {
  std::string csv = tmp("tables.csv");
  auto r = run({"bench", "--suite", "tables", "--out", csv});
  EXPECT_EQ(r.code, 0) << r.out;
  std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("class,n,bound,colors_used,valid\n", 0), 0u);
  EXPECT_EQ(text.find("false"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"exact", "--mode", "xx", "--graph", "a", "--max-k", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--mode", "on", "--graph", "/nonexistent", "--coloring", "/nonexistent"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
