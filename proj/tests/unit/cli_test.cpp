#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = fkext::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, CheckExitCodes) {
  const Result k4 = run({"check", "C~", "-k", "1"});
  EXPECT_EQ(k4.code, 0);
  EXPECT_NE(k4.out.find("status: extendable"), std::string::npos);

  const Result p3 = run({"check", "Bg", "-k", "1"});
  EXPECT_EQ(p3.code, 1);
  EXPECT_NE(p3.out.find("out_of_domain"), std::string::npos);

  const Result c5 = run({"check", "Dhc", "-k", "1", "--format", "json"});
  EXPECT_EQ(c5.code, 1);
  const auto j = json_of(c5);
  EXPECT_EQ(j["results"][0]["status"], "not_extendable");
  EXPECT_EQ(j["results"][0]["lemma"]["violating_set"].size(), 3u);
  EXPECT_EQ(j["results"][0]["definitional"]["answer"], false);

  EXPECT_EQ(run({"check", "D", "-k", "1"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, Extremal) {
  const Result g2 = run({"extremal", "-n", "11", "-k", "1", "-s", "2", "--format", "json"});
  EXPECT_EQ(g2.code, 0);
  const auto j = json_of(g2);
  EXPECT_EQ(j["results"][0]["e"], 47);
  EXPECT_EQ(j["results"][0]["graph6"], "J~~~~~~~}??");
  EXPECT_EQ(j["results"][0]["polynomials"]["f2"], "1, -29, 212, -288");

  EXPECT_EQ(json_of(run({"extremal", "-n", "11", "-k", "1", "-s", "6", "--format", "json"}))["results"][0]["e"], 45);
  const Result bad = run({"extremal", "-n", "5", "-k", "1", "-s", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("s >= 2k"), std::string::npos);

  // Above the graph6 limit only the block matrices are used.
  const auto big = json_of(run({"extremal", "-n", "90", "-k", "2", "-s", "7", "--format", "json"}));
  EXPECT_TRUE(big["results"][0]["graph6"].is_null());
}

TEST(Cli, Polys) {
  const Result f2 = run({"polys", "f2", "-n", "11", "-k", "1"});
  EXPECT_EQ(f2.code, 0);
  EXPECT_EQ(f2.out, "1, -29, 212, -288\n");
  const auto j = json_of(run({"polys", "phi_B3_case2", "-n", "0", "-k", "1", "-s", "5", "--delta", "3",
                              "--format", "json"}));
  EXPECT_EQ(j["results"][0]["match"], true);
  EXPECT_EQ(run({"polys", "f2", "-n", "3", "-k", "1"}).code, 2);
}

TEST(Cli, SweepFromStdin) {
  const std::string corpus = "J~~~~~~~}??\n# note\nbad\n";
  const Result r = run({"sweep", "--theorem", "edge_1", "-k", "1", "-", "--format", "json"}, corpus);
  EXPECT_EQ(r.code, 2);  // parse error, no counterexample
  const auto j = json_of(r);
  EXPECT_EQ(j["command"], "sweep");
  EXPECT_EQ(j["summary"]["scanned"], 2);
  EXPECT_EQ(j["summary"]["equality_cases"], 1);
  EXPECT_EQ(j["summary"]["counterexamples"], 0);
  EXPECT_EQ(j["results"][1]["line"], 3);
  EXPECT_TRUE(j["results"][1].contains("error"));

  const Result ok = run({"sweep", "--theorem", "edge1", "-k", "1", "-"}, "J~~~~~~~}??\n");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("counterexamples 0"), std::string::npos);
  EXPECT_EQ(run({"sweep", "--theorem", "q9", "-"}, "").code, 2);
}

TEST(Cli, SweepDeterministicAcrossJobs) {
  const Result corpus = run({"enumerate", "-n", "7", "--connected"});
  ASSERT_EQ(corpus.code, 0);
  const Result a = run({"sweep", "--theorem", "q_1", "-k", "1", "-", "--format", "json", "--deterministic",
                        "--jobs", "1"},
                       corpus.out);
  const Result b = run({"sweep", "--theorem", "q_1", "-k", "1", "-", "--format", "json", "--deterministic",
                        "--jobs", "3"},
                       corpus.out);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_of(a)["summary"]["scanned"], 853);
}

TEST(Cli, GridAndCsv) {
  const Result g = run({"grid", "--lemma", "q1q2", "-k", "1..3", "-n", "40", "--format", "json"});
  EXPECT_EQ(g.code, 0);
  const auto j = json_of(g);
  EXPECT_EQ(j["summary"]["counterexamples"], 0);
  EXPECT_GT(j["summary"]["equality_cases"], 0);

  const Result csv = run({"grid", "--lemma", "q1q2", "-k", "1", "-n", "10", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "k,n,s,delta,g1_full,g1_root,ref_full,ref_root,expect_equal,ok");
}

TEST(Cli, ReportAndOutputFile) {
  const std::string path = testing::TempDir() + "fkext_report.json";
  const Result r = run({"report", "Bg", "--format", "json", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  const auto j = nlohmann::json::parse(file);
  EXPECT_EQ(j["results"][0]["mu"], 2.73205080757);  // 1 + sqrt 3 to 12 digits
  std::remove(path.c_str());
}

TEST(Cli, NumbersHaveTwelveDigits) {
  EXPECT_EQ(fkext::cli::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(fkext::cli::format_number(47.0), "47");
}

TEST(Cli, Enumerate) {
  const Result r = run({"enumerate", "-n", "4", "--connected"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  const Result dense = run({"enumerate", "-n", "11", "--max-missing", "0"});
  EXPECT_EQ(dense.out, "J~~~~~~~~~_\n");
}
