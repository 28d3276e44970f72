#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "g2roll/cli.hpp"

using namespace g2roll;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, VerifyAllJson) {
  Invocation r = run({"verify-all", "--format", "json", "--seed", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  std::set<std::string> statuses;
  std::string prev;
  for (const auto& c : j) {
    ASSERT_TRUE(c.contains("id") && c.contains("locus") && c.contains("status") && c.contains("witness"));
    EXPECT_FALSE(c.contains("duration_s"));
    std::string id = c["id"];
    EXPECT_LE(prev, id);
    prev = id;
    statuses.insert(c["status"].get<std::string>());
  }
  EXPECT_EQ(statuses.count("fail"), 0u);
  EXPECT_TRUE(statuses.count("flagged"));
}

TEST(Cli, VerifyAllIsDeterministic) {
  Invocation a = run({"verify-all", "--format", "json", "--seed", "0"});
  Invocation b = run({"verify-all", "--format", "json", "--seed", "0"});
  EXPECT_EQ(a.out, b.out);
  Invocation c = run({"verify-all", "--format", "json", "--seed", "5"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, TimingsAreOptIn) {
  Invocation r = run({"octonions", "--format", "json", "--timings"});
  ASSERT_EQ(r.code, 0);
  for (const auto& c : json::parse(r.out)) EXPECT_TRUE(c.contains("duration_s"));
}

TEST(Cli, EnvironmentSeedOverridesFlag) {
  Invocation flag = run({"verify-all", "--format", "json", "--seed", "7"});
  setenv("G2ROLL_SEED", "7", 1);
  Invocation env = run({"verify-all", "--format", "json", "--seed", "0"});
  setenv("G2ROLL_SEED", "x7", 1);
  Invocation bad = run({"octonions"});
  unsetenv("G2ROLL_SEED");
  EXPECT_EQ(flag.out, env.out);
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, ConstantsText) {
  Invocation r = run({"constants", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_file(std::string(G2ROLL_GOLDEN_DIR) + "/constants.txt"));
}

TEST(Cli, ConstantsJsonAndLatex) {
  Invocation j = run({"constants", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  json d = json::parse(j.out);
  EXPECT_EQ(d["table"]["X2"]["Y3"], "36");
  EXPECT_EQ(d["diagonal"]["h1"], "8h + 12H");
  Invocation l = run({"constants", "--format", "latex"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("\\begin{array}"), std::string::npos);
}

TEST(Cli, RollingGrowthLines) {
  Invocation r = run({"rolling", "--ratio", "3", "--growth", "--samples", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  for (const auto& l : ls) EXPECT_EQ(l.rfind("(2,3,5)", 0), 0u) << l;
  Invocation one = run({"rolling", "--ratio", "1", "--growth", "--samples", "2"});
  for (const auto& l : lines(one.out)) EXPECT_EQ(l.rfind("(2,2,2)", 0), 0u) << l;
  Invocation j = run({"rolling", "--ratio", "1/3", "--growth", "--samples", "2", "--format", "json"});
  json d = json::parse(j.out);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0]["growth"], json::array({2, 3, 5}));
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"roots"}).code, 0);
  Invocation roots = run({"roots", "--emit-json"});
  ASSERT_EQ(roots.code, 0);
  json d = json::parse(roots.out);
  EXPECT_EQ(d["roots"].size(), 12u);
  EXPECT_EQ(d["weights"]["e1"], json::array({"2", "-1", "-1"}));
  EXPECT_EQ(d["derived_flag"], json::array({2, 3, 5}));

  Invocation scan = run({"compact", "--ratio-scan"});
  EXPECT_EQ(scan.code, 0);
  EXPECT_NE(scan.out.find("compact.ratio_scan[1/3,swapped]"), std::string::npos);

  Invocation chain = run({"quadric", "--chain", "--format", "json"});
  ASSERT_EQ(chain.code, 0);
  for (const auto& c : json::parse(chain.out)) {
    std::string id = c["id"];
    EXPECT_TRUE(id == "quadric.chain" || id == "quadric.distribution_invariance") << id;
  }
  Invocation cover = run({"quadric", "--cover", "--ratio-scan"});
  EXPECT_EQ(cover.code, 0);
  EXPECT_NE(cover.out.find("quadric.cover_ratio"), std::string::npos);

  Invocation rank = run({"pfaffian", "--rank-at", "x1,0,0"});
  EXPECT_EQ(rank.code, 0);
  EXPECT_NE(rank.out.find("kernel(alpha,beta) = 4"), std::string::npos);
  EXPECT_NE(rank.out.find("kernel(alpha,beta,gamma) = 3"), std::string::npos);
  Invocation rank2 = run({"pfaffian", "--rank-at", "x1,y2,0", "--format", "json"});
  EXPECT_EQ(json::parse(rank2.out)["kernel_alpha_beta"], 3);
  EXPECT_EQ(run({"pfaffian", "--verify-all"}).code, 0);

  Invocation table = run({"octonions", "--table"});
  EXPECT_EQ(table.out, read_file(std::string(G2ROLL_GOLDEN_DIR) + "/octonion_table.txt"));
}

TEST(Cli, OutFile) {
  std::string path = ::testing::TempDir() + "g2roll_constants.txt";
  Invocation r = run({"constants", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), read_file(std::string(G2ROLL_GOLDEN_DIR) + "/constants.txt"));
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify-all", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify-all", "--format", "latex"}).code, 2);
  EXPECT_EQ(run({"rolling", "--ratio", "abc", "--growth"}).code, 2);
  EXPECT_EQ(run({"rolling", "--ratio", "-2", "--growth"}).code, 2);
  EXPECT_EQ(run({"pfaffian", "--rank-at", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify-all", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
