#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace propalg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "propalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Canon) {
  const Result r = invoke({"canon", "--formula", "a1 | a2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "n: 2\n"
            "tt: 1110\n"
            "hex: e\n"
            "anf: a1 ⊕ a2 ⊕ a1·a2\n"
            "primes: {0}\n"
            "minterms: {1, 2, 3}\n");
}

TEST(CliTest, JsonMirrorsText) {
  const Result text = invoke({"canon", "--formula", "a1 & !a3"});
  const Result json = invoke({"canon", "--formula", "a1 & !a3", "--json"});
  ASSERT_EQ(json.code, kOk);
  const auto doc = nlohmann::ordered_json::parse(json.out);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["tt"], "00001010");
  EXPECT_EQ(doc["minterms"], (std::vector<int>{1, 3}));
  EXPECT_NE(text.out.find("tt: 00001010\n"), std::string::npos);
  EXPECT_NE(text.out.find("minterms: {1, 3}\n"), std::string::npos);
}

TEST(CliTest, Count) {
  const Result r = invoke({"count", "--formula", "a1 ^ a2", "--list"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "n: 2\nmodels: 2\nassignments:\n  j=1: a1=1 a2=0\n  j=2: a1=0 a2=1\n");
  EXPECT_EQ(invoke({"count", "--formula", "a1", "--n", "10"}).out, "n: 10\nmodels: 512\n");
}

TEST(CliTest, ExpandBlowUp) {
  const std::string path = ::testing::TempDir() + "/blowup.cnf";
  {
    std::ofstream file(path);
    file << "p cnf 4 1\n1 2 -3 0\n";
  }
  const Result r = invoke({"expand", "--dimacs", path});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "c full prime form\nc primes_count: 2\nc models: 14\n"
            "p cnf 4 2\n1 2 -3 4 0\n1 2 -3 -4 0\n");
}

TEST(CliTest, Flip) {
  const Result r = invoke({"flip", "--formula", "a1 & !a2", "--flip", "a1,a2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("mask: 3 (a1,a2)\n"), std::string::npos);
  EXPECT_NE(r.out.find("  formula: !a1 & a2\n"), std::string::npos);
  EXPECT_NE(r.out.find("models: 1 -> 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("conservation: ok\n"), std::string::npos);
  EXPECT_EQ(invoke({"flip", "--formula", "a1", "--flip", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"flip", "--formula", "a1"}).code, kUsageError);
}

TEST(CliTest, Tautology) {
  EXPECT_EQ(invoke({"taut", "--formula", "((a1|a2)&(!a1|a3)) -> (a2|a3)"}).code, kOk);
  const Result r = invoke({"taut", "--formula", "a1"});
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_NE(r.out.find("falsified_by: j=0: a1=0\n"), std::string::npos);
}

TEST(CliTest, Verify) {
  const Result r = invoke({"verify", "--all", "--n", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("summary: 8/8 passed\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out, invoke({"verify", "--all", "--n", "2"}).out);
  EXPECT_EQ(invoke({"verify", "--resolution"}).out,
            "PASS resolution n=3 checks=12\nsummary: 1/1 passed\n");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({"canon", "--formula", "a1 |"}).code, kUsageError);
  EXPECT_EQ(invoke({"canon", "--formula", "a1 | a2 ^ a3"}).code, kUsageError);
  EXPECT_EQ(invoke({"canon"}).code, kUsageError);
  EXPECT_EQ(invoke({"bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--tiv", "--n", "3"}).code, kResourceGuard);
  EXPECT_EQ(invoke({"count", "--formula", "a1", "--n", "20", "--max-vars", "10"}).code,
            kResourceGuard);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(CliTest, ParseErrorsReportPosition) {
  const Result r = invoke({"canon", "--formula", "a1 |"});
  EXPECT_NE(r.err.find("column 5"), std::string::npos) << r.err;
  const std::string path = ::testing::TempDir() + "/bad.cnf";
  {
    std::ofstream file(path);
    file << "p cnf 2 1\n1 3 0\n";
  }
  const Result d = invoke({"canon", "--dimacs", path});
  EXPECT_EQ(d.code, kUsageError);
  EXPECT_NE(d.err.find("line 2"), std::string::npos) << d.err;
}

}  // namespace
}  // namespace propalg::cli
