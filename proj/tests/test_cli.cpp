#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = wmcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = WMGROUPS_TEST_DATA;

}  // namespace

TEST(Cli, EvalLampIdentity) {
  const CliRun r = run({"eval", "--group", "lamp(Z)", "[fg(5), sigma]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "delta(5)\n");
}

TEST(Cli, EvalSeveralExpressionsAndJson) {
  const CliRun r = run({"eval", "-g", "S(3)", "(1 2)(2 3)", "[(1 2), (2 3)]", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["value"], "(1 2 3)");
  EXPECT_EQ(j[1]["value"], "(1 3 2)");
}

TEST(Cli, Cmp) {
  EXPECT_EQ(run({"cmp", "-g", "lamp(Z)", "fg(5)", "sigma"}).out, "not equal (less)\n");
  EXPECT_EQ(run({"cmp", "-g", "lamp(Z)", "[fg(2), sigma]", "delta(2)"}).out, "equal (equal)\n");
  EXPECT_EQ(run({"cmp", "-g", "S(3)", "(1 2)", "(2 3)"}).out, "not equal\n");
}

TEST(Cli, CrystaMatchesExample) {
  const CliRun r = run({"crysta", "--rank", "2", "--quotient", "Z/2: x->s, y->s"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["faithful"], true);
  EXPECT_EQ(j["verdict"], true);
}

TEST(Cli, CrystaFromQmapFile) {
  const CliRun r = run({"crysta", "--qmap", kData + "/z2_rank3.qmap"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 5);
  EXPECT_EQ(j["verdict"], true);
}

TEST(Cli, CrystaRankMismatchIsAnError) {
  const CliRun r = run({"crysta", "--rank", "3", "--quotient", "Z/2: x->s, y->s"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, WmReportHigman) {
  const CliRun r = run({"wm-report", kData + "/higman.pres", "--max-index", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("consistent-with-WM up to 5"), std::string::npos);
  EXPECT_NE(r.out.find("Amenability"), std::string::npos);
}

TEST(Cli, WmReportNegativeVerdict) {
  const CliRun r = run({"--json", "wm-report", kData + "/s3.pres"});
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NOT WM");
  EXPECT_EQ(j["witness_subgroup"]["index"], 2);
}

TEST(Cli, Fox) {
  const CliRun r = run({"fox", "--quotient", "Z/2: x->s, y->s", "[x,y]", "--mod-p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("d/dx1: 1 - s"), std::string::npos);
  EXPECT_NE(r.out.find("d/dx2: -1 + s"), std::string::npos);
  EXPECT_NE(r.out.find("in N': no"), std::string::npos);
  EXPECT_NE(r.out.find("(nontrivial)"), std::string::npos);
}

TEST(Cli, Witnesses) {
  const CliRun c = run({"witness", "commutator", "-g", "tower(Z)", "at(1, sigma)"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("(verified)"), std::string::npos);
  const CliRun n = run({"--json", "witness", "normal-closure", "-g", "wr(Z,Z)", "--x", "2", "--y", "3", "--b", "1"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(nlohmann::json::parse(n.out)["terms"].size(), 4u);
  const CliRun t = run({"witness", "normal-closure", "-g", "theta(Z)", "--x", "fg(2)", "--y", "sigma", "--b", "fg(1)"});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(run({"witness", "commutator", "-g", "lamp(Z)", "fg(1)"}).code, 1);
}

TEST(Cli, OrderCheck) {
  const CliRun r = run({"order-check", "-g", "S(3)", "(1 2 3)"});
  EXPECT_EQ(r.out, "(1 2 3): unordered, order 3\n");
  const CliRun s = run({"order-check", "-g", "lamp(Z)", "--samples", "50"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("2 passed, 0 failed"), std::string::npos);
}

TEST(Cli, ErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"eval", "-g", "lamp(Z"}).code, 1);
  EXPECT_EQ(run({"eval", "-g", "Z", "sigma"}).code, 1);
  EXPECT_EQ(run({"eval", "-g", "Z", "1", "--bogus"}).code, 1);
  EXPECT_EQ(run({"wm-report", "/nonexistent.pres"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"--seed", "9", "selftest", "--samples", "10"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}
