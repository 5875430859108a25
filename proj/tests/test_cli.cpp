#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "abcu/cli.hpp"
#include "support.hpp"

using namespace abcu;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.ends_with(".json") || a.ends_with(".txt")) a = std::string(ABCU_FIXTURES) + "/" + a;
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SpecExamples) {
  const auto yes = run({"poscom", "--profile", "e1.json", "--rule", "av", "--k", "1", "--committee", "a"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(Json::parse(yes.out)["answer"], true);
  EXPECT_FALSE(Json::parse(yes.out).contains("witness"));

  const auto no = run({"neccom", "--profile", "e1.json", "--rule", "av", "--k", "1", "--committee", "b"});
  EXPECT_EQ(no.code, 1);
  const auto j = Json::parse(no.out);
  EXPECT_EQ(j["answer"], false);
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_EQ(j["witness_committee"], Json::parse(R"(["a"])"));

  const auto refused = run({"poscom", "--profile", "e2.json", "--rule", "av", "--committee", "a", "--method", "poly"});
  EXPECT_EQ(refused.code, 3);
  EXPECT_TRUE(refused.out.empty());
  EXPECT_NE(refused.err.find("NoPolyAlgorithm"), std::string::npos);
}

TEST(Cli, WitnessFlag) {
  const auto r = run({"poscom", "--profile", "e1.json", "--committee", "b", "--witness"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["witness"], Json::parse(R"([["a"], ["b"]])"));
  EXPECT_EQ(j["witness_committee"], Json::parse(R"(["b"])"));
}

TEST(Cli, Membership) {
  EXPECT_EQ(run({"posmem", "--profile", "e2.json", "--candidate", "b"}).code, 0);
  EXPECT_EQ(run({"necmem", "--profile", "e2.json", "--candidate", "a"}).code, 1);
  EXPECT_EQ(run({"necmem", "--profile", "e2.json", "--candidate", "c", "--rule", "sav"}).code, 0);
  EXPECT_EQ(run({"necmem", "--profile", "e2.json", "--candidate", "d"}).code, 2);
}

TEST(Cli, Representation) {
  const auto r = run({"check", "--profile", "e3.json", "--committee", "a,b", "--axiom", "jr"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["group_witness"]["voters"], Json::parse("[0, 1]"));
  EXPECT_EQ(run({"check", "--profile", "e3.json", "--committee", "a,c", "--axiom", "ejr"}).code, 0);
  EXPECT_EQ(run({"check", "--profile", "e3.json", "--committee", "a,c", "--axiom", "pjr", "--method", "brute"}).code, 0);
  EXPECT_EQ(run({"posjr", "--profile", "e1.json", "--committee", "a"}).code, 0);
  EXPECT_EQ(run({"necjr", "--profile", "e1.json", "--committee", "b"}).code, 0);
  const auto pjr = run({"posjr", "--profile", "e1.json", "--committee", "a", "--axiom", "pjr"});
  EXPECT_EQ(pjr.code, 0);
  EXPECT_EQ(Json::parse(pjr.out)["method"], "brute-experimental");
  EXPECT_EQ(run({"necjr", "--profile", "e1.json", "--committee", "a", "--axiom", "ejr", "--method", "poly"}).code, 3);
  // check needs a complete profile
  EXPECT_EQ(run({"check", "--profile", "e1.json", "--committee", "a"}).code, 2);
}

TEST(Cli, WinnersEnumerateGen) {
  const auto w = run({"winners", "--profile", "e3.json"});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(Json::parse(w.out)["winners"], Json::parse(R"([["a", "c"], ["b", "c"]])"));
  EXPECT_EQ(Json::parse(w.out)["score"], "3");

  const auto e = run({"enumerate", "--profile", "e2.json"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(Json::parse(e.out)["count"], "3");
  EXPECT_EQ(Json::parse(e.out)["completions"].size(), 3U);
  EXPECT_EQ(run({"enumerate", "--profile", "e2.json", "--cap", "2"}).code, 3);

  const auto g = run({"gen", "--gadget", "linearx3c", "--instance", "x3c_cover.txt", "--x", "1"});
  EXPECT_EQ(g.code, 0);
  const auto j = Json::parse(g.out);
  EXPECT_EQ(j["source_solvable"], true);
  EXPECT_EQ(j["rule"], "table:0,1,2");
  EXPECT_EQ(j["committee"], Json::parse(R"(["c", "d"])"));
  EXPECT_NO_THROW(parse_profile(j["profile"].dump()));
  EXPECT_EQ(run({"gen", "--gadget", "linearx3c", "--instance", "one_in_three.txt"}).code, 2);
  EXPECT_EQ(run({"gen", "--gadget", "cc3va", "--instance", "one_in_three.txt"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"poscom", "--profile", "e1.json"}).code, 2);
  EXPECT_EQ(run({"poscom", "--profile", "missing.json", "--committee", "a"}).code, 2);
  EXPECT_EQ(run({"poscom", "--profile", "e1.json", "--committee", "a,b"}).code, 2);
  EXPECT_EQ(run({"poscom", "--profile", "e1.json", "--committee", "a", "--rule", "bogus"}).code, 2);
  EXPECT_EQ(run({"poscom", "--profile", "e1.json", "--committee", "a", "--method", "fast"}).code, 2);
  EXPECT_EQ(run({"poscom", "--profile", "e1.json", "--committee", "a", "--k", "3"}).code, 2);
}

TEST(Cli, CapFromEnvironment) {
  ::setenv("ABCU_CAP", "1", 1);
  const auto r = run({"poscom", "--profile", "e1.json", "--committee", "a", "--rule", "pav"});
  ::unsetenv("ABCU_CAP");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("CapExceeded"), std::string::npos);
  EXPECT_EQ(run({"poscom", "--profile", "e1.json", "--committee", "a", "--rule", "pav"}).code, 0);
}
