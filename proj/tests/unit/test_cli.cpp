#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "matforms");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = matforms::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, NormalizeText) {
  const Outcome o = run({"normalize", "s[1](x2*x1)", "--text"});
  EXPECT_EQ(o.code, matforms::cli::kOk);
  EXPECT_EQ(o.out, "tr(x1*x2)\n");
}

TEST(Cli, NormalizeJson) {
  const Outcome o = run({"normalize", "tr(x1^2)", "--truncate", "1"});
  ASSERT_EQ(o.code, 0);
  const auto j = o.json();
  EXPECT_EQ(j["command"], "normalize");
  EXPECT_EQ(j["result"]["text"], "tr(x1)^2");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--n", "2", "chi[2,0](x1,x1,x1)"}).code, matforms::cli::kOk);
  const Outcome bad = run({"verify", "--n", "2", "tr(x1*x2) - tr(x1)*tr(x2)"});
  EXPECT_EQ(bad.code, matforms::cli::kNonIdentity);
  const auto j = bad.json();
  EXPECT_FALSE(j["identity"].get<bool>());
  EXPECT_TRUE(j.contains("witness"));
  const Outcome r = run({"verify", "--n", "3", "--mode", "randomized", "chi[3](x1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_LT(r.json()["error_bound"].get<double>(), 1e-30);
}

TEST(Cli, UsageErrors) {
  const Outcome parse_error = run({"verify", "tr(x1"});
  EXPECT_EQ(parse_error.code, matforms::cli::kUsage);
  EXPECT_NE(parse_error.err.find("line 1, column 6"), std::string::npos) << parse_error.err;
  EXPECT_EQ(run({"verify", "--mode", "sometimes", "x1"}).code, matforms::cli::kUsage);
  EXPECT_EQ(run({}).code, matforms::cli::kUsage);
  EXPECT_EQ(run({"generators", "--n", "2"}).code, matforms::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, matforms::cli::kOk);
}

TEST(Cli, Expand) {
  const Outcome o = run({"expand", "amitsur", "--t", "2", "--u", "2"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["result"]["text"], "tr(x1)*tr(x2) + s[2](x1) + s[2](x2) - tr(x1*x2)");
  EXPECT_EQ(run({"expand", "power", "--t", "1", "--l", "2"}).json()["result"]["text"], "tr(x1)^2 - 2*s[2](x1)");
  EXPECT_EQ(run({"expand", "trs", "--t", "0", "--r", "1", "--s", "1"}).code, 0);
}

TEST(Cli, Linearize) {
  const Outcome o = run({"linearize", "--t", "2,1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.json()["matches_multiset_formula"].get<bool>());
}

TEST(Cli, GeneratorsReport) {
  const Outcome o = run({"generators", "--gl", "--n", "2", "--p", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = o.json();
  EXPECT_TRUE(j["ok"].get<bool>());
  ASSERT_FALSE(j["results"].empty());
  for (const auto& r : j["results"]) {
    EXPECT_TRUE(r.contains("family"));
    EXPECT_TRUE(r.contains("parameters"));
    EXPECT_TRUE(r.contains("verdict"));
    EXPECT_TRUE(r.contains("millis"));
  }
  const Outcome list = run({"generators", "--o", "--n", "2", "--p", "3", "--list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_FALSE(list.json()["generators"].empty());
}

TEST(Cli, BijectionAndSelfcheck) {
  EXPECT_EQ(run({"bijection", "--map", "gl_sets", "--degree", "5"}).code, 0);
  const Outcome o2 = run({"bijection", "--map", "o_sets2", "--degree", "5"});
  EXPECT_EQ(o2.code, matforms::cli::kNonIdentity);
  EXPECT_FALSE(o2.json()["surjective"].get<bool>());
  const Outcome self = run({"selfcheck"});
  EXPECT_EQ(self.code, 0) << self.err;
  EXPECT_TRUE(self.json()["ok"].get<bool>());
}
