#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gft::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const CliRun& r) { return nlohmann::ordered_json::parse(r.out); }

TEST(Cli, ClassifyQuarterHolds) {
  const CliRun r = run({"classify", "--expr", "z/4 + 1/z", "--family", "bc", "--alpha", "0.5", "--json", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_TRUE(j["verdict"]["holds"].get<bool>());
  EXPECT_NEAR(j["order_estimate"].get<double>(), 0.6, 1e-3);
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_EQ(j["wall_time_ms"], 0);
  for (const char* key : {"inputs", "verdict", "result", "tolerances"}) EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"re", "im", "value"}) EXPECT_TRUE(j["verdict"]["witness"].contains(key)) << key;
}

TEST(Cli, FailingVerdictExitsOne) {
  const CliRun r = run({"classify", "--catalog", "koebe", "--family", "c", "--alpha", "0", "--json", "--no-timing"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json_of(r)["verdict"]["holds"].get<bool>());
}

TEST(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({"classify", "--expr", "z + * 2", "--family", "c"}).code, 2);
  EXPECT_EQ(run({"classify", "--expr", "z", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"palpha"}).code, 2);
  EXPECT_EQ(run({"palpha", "--q", "x - 0.5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicWithoutTiming) {
  const std::vector<std::string> args = {"order", "--catalog", "scaled_cot", "--family", "bc", "--rings", "16",
                                         "--points", "64", "--json", "--no-timing"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, NumericCommands) {
  auto j = json_of(run({"radius", "--alpha", "0", "--json", "--no-timing"}));
  EXPECT_NEAR(j["result"]["r_alpha"].get<double>(), 0.2679491924311227, 1e-14);

  const CliRun cq = run({"const-q", "--target", "0.5", "--json", "--no-timing"});
  ASSERT_EQ(cq.code, 0) << cq.err;
  EXPECT_NEAR(json_of(cq)["result"]["c"].get<double>(), 1.3585328764616391, 1e-13);

  const CliRun pa = run({"palpha", "--q", "0", "--alpha", "1", "--json", "--no-timing"});
  EXPECT_EQ(pa.code, 0) << pa.err;
  EXPECT_EQ(run({"palpha", "--q", "4", "--alpha", "0"}).code, 1);

  const CliRun sc = run({"schwarzian", "--expr", "z/(1-z)^2", "--z", "0", "--json", "--no-timing"});
  ASSERT_EQ(sc.code, 0) << sc.err;
  EXPECT_NEAR(json_of(sc)["result"]["schwarzian"]["re"].get<double>(), -6.0, 1e-10);
}

TEST(Cli, TextOutputMentionsVerdict) {
  const CliRun r = run({"classify", "--expr", "(1-z)/z", "--family", "bc", "--alpha", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, CatalogVerify) {
  const CliRun r = run({"catalog", "--verify", "--rings", "16", "--points", "128", "--json", "--no-timing"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

}  // namespace

namespace {

TEST(Cli, EverySubcommandEmitsTheReportSchema) {
  const std::vector<std::vector<std::string>> cases = {
      {"classify", "--catalog", "koebe", "--family", "sstar", "--rings", "16", "--points", "64"},
      {"order", "--expr", "-log(1-z)", "--family", "c", "--rings", "16", "--points", "64"},
      {"schwarzian", "--expr", "z/4 + 1/z", "--z", "0.3+0.2*i"},
      {"norm", "--catalog", "koebe", "--rings", "8", "--points", "64"},
      {"palpha", "--q", "1/(pi*(1+x^2))", "--alpha", "0.5"},
      {"const-q", "--alpha", "0"},
      {"radius", "--alpha", "0.5", "--expr", "z + 1/z - 2", "--rings", "16", "--points", "64"},
      {"factor-check", "--catalog", "scaled_cot", "--alpha", "0.25", "--rays", "8", "--rings", "16", "--points",
       "64"},
      {"theorem", "--which", "duality", "--catalog", "log_reciprocal", "--alpha", "0.5", "--rings", "16", "--points",
       "64"},
      {"sharpness", "--n", "3", "--beta", "0.5"},
      {"catalog"},
  };
  for (std::vector<std::string> args : cases) {
    args.push_back("--json");
    args.push_back("--no-timing");
    const CliRun r = run(args);
    ASSERT_TRUE(r.code == 0 || r.code == 1) << args[0] << ": " << r.err;
    const auto j = json_of(r);
    EXPECT_EQ(j["command"], args[0]);
    EXPECT_EQ(j["version"], "0.1.0");
    EXPECT_EQ(j["wall_time_ms"], 0);
    for (const char* key : {"inputs", "verdict", "result", "tolerances"}) EXPECT_TRUE(j.contains(key)) << args[0] << " " << key;
    EXPECT_TRUE(j["verdict"]["holds"].is_boolean()) << args[0];
    EXPECT_EQ(j["verdict"]["holds"].get<bool>(), r.code == 0) << args[0];
    // field order is part of the contract
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys.front(), "command");
    EXPECT_EQ(keys.back(), "version");
  }
}

}  // namespace
