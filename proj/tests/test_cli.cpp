#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace famalg::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "famalg");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string &s) { return int(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, ParseSeed) {
  EXPECT_EQ(parse_seed("0xFA417A"), 0xFA417Au);
  EXPECT_EQ(parse_seed("42"), 42u);
  EXPECT_FALSE(parse_seed("4x2").has_value());
  EXPECT_FALSE(parse_seed("").has_value());
}

TEST(Cli, ParseMonomial) {
  EXPECT_EQ(parse_monomial("L^3R"), (famalg::MonomialIndex{3, 0, 1}));
  EXPECT_EQ(parse_monomial("LLSR"), (famalg::MonomialIndex{2, 1, 1}));
  EXPECT_EQ(parse_monomial("1"), (famalg::MonomialIndex{}));
  EXPECT_FALSE(parse_monomial("RL").has_value());
  EXPECT_FALSE(parse_monomial("SS").has_value());
  EXPECT_FALSE(parse_monomial("L^").has_value());
}

TEST(Cli, VerifyN4) {
  const auto r = invoke({"verify", "--n", "4", "--relations", "all"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_GE(count_lines(r.out), 30);
}

TEST(Cli, VerifyJsonIsByteIdentical) {
  const std::vector<std::string> args{"verify", "--n", "3", "--format", "json", "--seed", "7"};
  const auto a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["seed"], 7);
  for (const auto &rel : j["relations"]) {
    EXPECT_TRUE(rel.contains("relation_id"));
    EXPECT_TRUE(rel["wall_time_ms"].is_null());
    EXPECT_EQ(rel["n"], 3);
  }
}

TEST(Cli, TimingFillsWallTime) {
  const auto r = invoke({"verify", "--n", "2", "--format", "json", "--timing", "--relations", "commute"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["relations"].size(), 3u);
  for (const auto &rel : j["relations"])
    EXPECT_TRUE(rel["wall_time_ms"].is_number());
}

TEST(Cli, QuotedN4IdentitiesAreOptIn) {
  const auto r = invoke({"verify", "--n", "4", "--relations", "n4.cubic", "--format", "json"});
  EXPECT_EQ(r.code, kCheckFailed);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["fails"], 1);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--relations", "n4"}).code, kUnsupported);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"verify", "--n", "1"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"verify"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"frobnicate", "--n", "3"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--relations", "nothing.here"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--points", "0"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"verify", "--n", "3", "--seed", "zz"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"verify", "--n", "5"}).code, kUnsupported);
  EXPECT_EQ(invoke({"verify", "--n", "6", "--extended"}).code, kUnsupported);
  EXPECT_EQ(invoke({"independence", "--n", "7"}).code, kUnsupported);
  EXPECT_EQ(invoke({"exponents", "--n", "3"}).code, kUnsupported);
  EXPECT_EQ(invoke({"dump", "generator", "Q", "--n", "2"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"dump", "bogus", "--n", "2"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"dump", "F", "--n", "2", "--k", "2"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"independence", "--n", "3", "--transversal", "odd"}).code, kInvalidConfig);
  EXPECT_EQ(invoke({"independence", "--n", "3", "--add", "RL"}).code, kInvalidConfig);
}

TEST(Cli, ExponentsJson) {
  const auto r = invoke({"exponents", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 6u);
  for (const auto &row : j["rows"]) {
    EXPECT_TRUE(row["match"].get<bool>());
    EXPECT_EQ(row["closed_form"]["text"], row["kostka"]["text"]);
  }
  EXPECT_EQ(j["rows"][5]["closed_form"]["text"], "q^2+q^3+2q^4+q^5+q^6");
  EXPECT_EQ(j["total_at_one"], 21);
  EXPECT_EQ(invoke({"exponents", "--n", "4", "--format", "table"}).code, kOk);
}

TEST(Cli, IndependenceReport) {
  const auto r = invoke({"verify", "independence", "--n", "4", "--points", "2", "--seed", "5", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["expected"], 21);
  EXPECT_EQ(j["rank"], 21);
  EXPECT_EQ(j["points"], 2);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_TRUE(j["exact"].is_boolean());

  const auto extra = invoke({"independence", "--n", "4", "--add", "L^2R^2", "--format", "json"});
  EXPECT_EQ(extra.code, kOk);
  const auto je = nlohmann::json::parse(extra.out);
  EXPECT_EQ(je["expected"], 22);
  EXPECT_EQ(je["rank"], 21);
  EXPECT_TRUE(je["exact"].get<bool>());
}

TEST(Cli, DumpCasimir) {
  const auto r = invoke({"dump", "casimir", "--n", "2", "--k", "2", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["text"], "2*x1*x2 + 1/2*x3^2");
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][1]["coefficient"], "1/2");
  const auto text = invoke({"dump", "casimir", "--n", "3"});
  EXPECT_NE(text.out.find("d3 = "), std::string::npos);
}

TEST(Cli, DumpGenerator) {
  const auto r = invoke({"dump", "generator", "S", "--n", "2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("S[H1][H1] = 1/2*x3^2"), std::string::npos);
  const auto f = invoke({"dump", "F", "--n", "2", "--format", "json"});
  ASSERT_EQ(f.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(f.out)["entries"][0][1], "x2");
}
