#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"

#include "graphoid/cli/cli.hpp"
#include "graphoid/error.hpp"
#include "oracles.hpp"

using namespace graphoid;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

std::string data(const std::string& name) { return std::string(GRAPHOID_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "graphoid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, FiberOfCot) {
  Outcome o = run({"fiber", data("xy.txt"), "--point", "0,0"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "fiber");
  EXPECT_TRUE(j["singular"].get<bool>());
  EXPECT_FALSE(j["arcs"].empty());
  EXPECT_LE(j["hausdorff"].get<double>(), 1e-6);
}

TEST(Cli, VerifyPassesOnTheCorpus) {
  for (const char* name : {"corpus/cot.txt", "corpus/two_lines.txt", "two_points.txt"}) {
    Outcome o = run({"verify", data(name)});
    ASSERT_EQ(o.code, cli::kExitOk) << name << o.err;
    json j = json::parse(o.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    ASSERT_FALSE(j["laws"].empty());
    for (const auto& law : j["laws"]) EXPECT_EQ(law["status"], "PASS") << name << " " << law["name"];
  }
}

TEST(Cli, SyntaxErrorReport) {
  Outcome o = run({"verify", data("bad.txt")});
  EXPECT_EQ(o.code, cli::kExitError);
  json j = json::parse(o.out);
  EXPECT_EQ(j["error"]["code"], "rf_parser.SyntaxError");
  EXPECT_EQ(j["error"]["offset"], 2);
  EXPECT_NE(o.err.find("rf_parser.SyntaxError"), std::string::npos);
}

TEST(Cli, ViolationExitCode) {
  Outcome o = run({"verify", data("slow_fiber.txt")});
  EXPECT_EQ(o.code, cli::kExitViolation);
  json j = json::parse(o.out);
  EXPECT_FALSE(j["ok"].get<bool>());
}

TEST(Cli, CsvFiber) {
  Outcome o = run({"fiber", data("xy.txt"), "--point", "0,0", "--radius", "1/4", "--samples", "64", "--format", "csv"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,f0");
  std::getline(in, line);
  EXPECT_EQ(line, "0,inf");
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_GE(rows, 64u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", data("xy.txt"), "--format", "csv"}).code, cli::kExitError);
  EXPECT_EQ(run({"fiber", data("xy.txt"), "--samples", "10"}).code, cli::kExitError);
  EXPECT_EQ(run({"fiber", data("xy.txt"), "--point", "1"}).code, cli::kExitError);
  EXPECT_EQ(run({"fiber", data("xy.txt"), "--radius", "-1/2"}).code, cli::kExitError);
  EXPECT_EQ(run({"shrug", data("xy.txt")}).code, cli::kExitError);
  EXPECT_EQ(run({"fiber", data("missing.txt")}).code, cli::kExitError);
  Outcome o = run({"fiber", data("xy.txt"), "--point", "a,b"});
  EXPECT_EQ(o.code, cli::kExitError);
  EXPECT_EQ(json::parse(o.out)["error"]["code"], "cli.InputError");
}

TEST(Cli, Deterministic) {
  Outcome a = run({"verify", data("corpus/node_circle.txt"), "--seed", "7"});
  Outcome b = run({"verify", data("corpus/node_circle.txt"), "--seed", "7"});
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EveryCommandReportsSchemaOne) {
  for (const char* c : {"branches", "limit", "fiber", "degree", "additivity", "obstruction", "mobius", "verify"}) {
    Outcome o = run({c, data("xy.txt"), "--point", "0,0", "--radius", "1/2"});
    ASSERT_EQ(o.code, cli::kExitOk) << c << ": " << o.err;
    json j = json::parse(o.out);
    EXPECT_EQ(j["schema"], 1) << c;
    EXPECT_EQ(j["command"], c);
  }
}

TEST(Cli, ParseRat) {
  EXPECT_EQ(cli::parse_rat("3"), Rat(3));
  EXPECT_EQ(cli::parse_rat("-1/2"), Rat(-1, 2));
  EXPECT_EQ(cli::parse_rat("0.125"), Rat(1, 8));
  EXPECT_EQ(cli::parse_rat("-2.5"), Rat(-5, 2));
  for (const char* bad : {"", "1/0", "x", "1.2.3", "1/"}) EXPECT_THROW(cli::parse_rat(bad), Error) << bad;
  auto [a, b] = cli::parse_point("1/3,-0.5");
  EXPECT_EQ(a, Rat(1, 3));
  EXPECT_EQ(b, Rat(-1, 2));
  EXPECT_THROW(cli::parse_point("1"), Error);
}
