#include <gtest/gtest.h>

#include <random>

#include "bivalence/cli.hpp"

namespace bivalence::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::string kData = BIVALENCE_TEST_DATA_DIR;

Report run(std::vector<std::string> args) { return dispatch(args); }

std::vector<std::string> with_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  return args;
}

const std::vector<std::vector<std::string>> kCommands{
    {"lattice", "check", kData + "/boolean2.json"},
    {"lattice", "check", "builtin:lantern:3"},
    {"parse", "(X1 | X2) & !(X1 & X2)"},
    {"eval", "--formula", "X1 ^ X2", "--mode", "lukasiewicz", "--assign", "X1=0.5,X2=0.5"},
    {"eval", "--formula", "X1 ^ X2", "--mode", "super", "--lattice", "builtin:boolean:2", "--assign", "X1=a,X2=b"},
    {"eval", "--formula", "X1 | X2", "--mode", "lattice", "--lattice", "builtin:chain:2", "--assign", "X1=c1,X2=c1",
     "--truth", "c1=1/2"},
    {"interference", "--p-or", "1", "--p1", "1/4", "--p2", "1/4"},
    {"interference", "--amp1", "1,0", "--amp2", "1,0"},
    {"nogo", "--lattice", kData + "/boolean2.json", "--bind", "X1=a,X2=b", "--amp1", "1,0", "--amp2", "1,0"},
    {"scan", "--values", "3"},
    {"scan", "--denominator", "4", "--threads", "3"},
    {"scan", "--partial"},
    {"super"},
};

TEST(Dispatch, NogoExample) {
  const Report r =
      run({"nogo", "--lattice", kData + "/boolean2.json", "--bind", "X1=a,X2=b", "--amp1", "1,0", "--amp2", "1,0"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.verdict, "no-go holds");
  ASSERT_EQ(r.payload["corners"].size(), 4U);
  const std::vector<std::string> expected{"C-TRUE", "C-INT", "C-INT", "C-COLLAPSE"};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.payload["corners"][i]["outcome"], expected[i]);
  EXPECT_EQ(r.payload["scenario"]["interference"], "1/2");
  EXPECT_EQ(r.payload["corners"][1]["trace"].size(), 11U);
}

TEST(Dispatch, ParseExample) {
  const Report r = run({"parse", "(X1 | X2) & !(X1 & X2)"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.payload["formula"], "(X1 | X2) & !(X1 & X2)");
  EXPECT_EQ(r.payload["tree"]["kind"], "And");
  EXPECT_EQ(r.payload["tree"]["children"][1]["kind"], "Not");
  EXPECT_NE(r.body.find("  And\n    Or\n      Atom X1\n      Atom X2\n    Not\n      And\n"), std::string::npos);

  const Report x = run({"parse", "X1 ^ X2"});
  EXPECT_EQ(x.payload["desugared"], "(X1 | X2) & !(X1 & X2)");
}

TEST(Dispatch, EvalExamples) {
  EXPECT_EQ(run({"eval", "--formula", "X1 ^ X2", "--mode", "lukasiewicz", "--assign", "X1=0.5,X2=0.5"}).verdict,
            "value: 1");
  const Report super = run({"eval", "--formula", "X1", "--mode", "super", "--assign", "X1=a"});
  EXPECT_EQ(super.verdict, "value: undefined");
  const Report lattice = run({"eval", "--formula", "X1 | X2", "--mode", "lattice", "--lattice", "builtin:chain:2",
                              "--assign", "X1=c1,X2=c1", "--truth", "c1=1/2"});
  EXPECT_EQ(lattice.payload["reduced"], "c1");
  EXPECT_EQ(lattice.payload["value"], "1/2");
}

TEST(Dispatch, Interference) {
  EXPECT_EQ(run({"interference", "--p-or", "1", "--p1", "1/4", "--p2", "1/4"}).verdict, "I12 = 3/4");
  EXPECT_EQ(run({"interference", "--p-or", "0.375", "--p1", "0.25", "--p2", "0.5"}).verdict, "I12 = 0");
  const Report amps = run({"interference", "--amp1", "1,0", "--amp2", "1,0"});
  EXPECT_EQ(amps.verdict, "I12 = 1/2");
  EXPECT_EQ(amps.payload["normalization"], "2");
  EXPECT_EQ(run({"interference", "--amp1", "1/2,1/2", "--amp2", "1/2,1/2"}).verdict, "I12 = 1/2");
}

TEST(Dispatch, ScanValuesThree) {
  const Report r = run({"scan", "--values", "3"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.payload["rows"].size(), 9U);
  EXPECT_EQ(r.payload["consistent"].size(), 5U);
  bool half_half = false;
  for (const auto& pair : r.payload["consistent"]) half_half |= pair == Json{"1/2", "1/2"};
  EXPECT_TRUE(half_half);
  EXPECT_TRUE(r.payload["corners_violated"].get<bool>());
}

TEST(Dispatch, Supervaluation) {
  const Report r = run({"super"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.payload["x1"]["value"], "undefined");
  EXPECT_EQ(r.payload["exactly_one"], "1");

  const Report extreme = run({"super", "--bind", "X1=0,X2=b"});
  EXPECT_EQ(extreme.exit_code, kExitUsage);
  EXPECT_NE(extreme.verdict.find("BindingAtExtreme"), std::string::npos);
}

TEST(Dispatch, LatticeCheckFailures) {
  const Report r = run({"lattice", "check", kData + "/two_maximal.json"});
  EXPECT_EQ(r.exit_code, kExitViolation);
  EXPECT_EQ(r.payload["violations"][0]["law"], "NoBoundedExtremes");
}

TEST(Dispatch, DegenerateScenario) {
  EXPECT_EQ(run({"nogo", "--amp1", "1,0", "--amp2", "0,0"}).exit_code, kExitUsage);
  const Report relaxed = run({"nogo", "--amp1", "1,0", "--amp2", "0,0", "--allow-degenerate"});
  EXPECT_EQ(relaxed.exit_code, kExitViolation);
  EXPECT_EQ(relaxed.verdict, "no-go fails");
}

TEST(Dispatch, UsageErrorsAreOneLine) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"parse"},
      {"parse", "X1 &"},
      {"eval", "--formula", "X1", "--mode", "classical"},
      {"eval", "--formula", "X1 & X2", "--assign", "X1=1"},
      {"eval", "--formula", "X1", "--assign", "X1"},
      {"nogo", "--bind", "X1=a"},
      {"nogo", "--bind", "X1=a,X2=zz"},
      {"nogo", "--lattice", "builtin:torus:2"},
      {"nogo", "--lattice", "builtin:boolean:x"},
      {"nogo", "--lattice", kData + "/missing.json"},
      {"nogo", "--amp1", "1,0"},
      {"nogo", "--amp1", "1,0", "--amp2", "1,0", "--p1", "1/2"},
      {"scan", "--values", "1"},
      {"scan", "--values", "3", "--partial"},
      {"scan", "--denominator", "0"},
      {"interference"},
      {"interference", "--p-or", "3/2", "--p1", "0", "--p2", "0"},
      {"lattice"},
      {"lattice", "check", "builtin:chain:0"},
      {"--format", "yaml", "super"},
  };
  for (const auto& args : bad) {
    const Report r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.exit_code, kExitUsage) << joined;
    const std::string text = render(r);
    EXPECT_EQ(text.find('\n'), text.size() - 1) << joined;
    EXPECT_EQ(text.rfind("error: ", 0), 0U) << joined;
  }
}

TEST(Dispatch, Help) {
  const Report r = run({"--help"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.body.find("nogo"), std::string::npos);
}

TEST(Reports, Deterministic) {
  for (const auto& args : kCommands) {
    EXPECT_EQ(render(run(args)), render(run(args)));
    EXPECT_EQ(render(run(with_json(args))), render(run(with_json(args))));
  }
}

TEST(Reports, PayloadRoundTrips) {
  for (const auto& args : kCommands) {
    const std::string text = render(run(with_json(args)));
    const Json parsed = Json::parse(text);
    EXPECT_EQ(parsed.dump(2) + "\n", text) << args[0];
    EXPECT_EQ(parsed["verdict"], run(args).verdict);
    EXPECT_EQ(parsed["exit_code"], run(args).exit_code);
  }
}

TEST(Reports, BodyAndPayloadAgree) {
  const Report scan = run({"scan", "--denominator", "4"});
  for (const auto& row : scan.payload["rows"]) {
    const std::string v1 = row["v1"], v2 = row["v2"], outcome = row["outcome"];
    // Every row of the payload appears as a table line with the same outcome.
    bool found = false;
    std::istringstream body(scan.body);
    for (std::string line; std::getline(body, line);) {
      std::istringstream cells(line);
      std::string a, b, c, d, e, f;
      cells >> a >> b >> c >> d >> e >> f;
      found |= a == v1 && b == v2 && f == outcome;
    }
    EXPECT_TRUE(found) << v1 << "," << v2;
  }
  const Report nogo = run({"nogo"});
  for (const auto& corner : nogo.payload["corners"]) {
    if (corner.contains("trace")) {
      for (const auto& step : corner["trace"]) {
        EXPECT_NE(nogo.body.find(step["statement"].get<std::string>()), std::string::npos);
      }
    }
  }
}

TEST(Reports, RandomArgumentsNeverCrash) {
  const std::vector<std::string> vocabulary{
      "lattice", "check", "parse", "eval", "interference", "nogo", "scan", "super", "--format", "json", "text",
      "--lattice", "builtin:boolean:2", "builtin:chain:3", "builtin:lantern:0", "--bind", "X1=a,X2=b", "X1=p1,X2=q1",
      "--amp1", "--amp2", "1,0", "0,1", "1/2,-1/2", "--p-or", "--p1", "--p2", "0", "1", "1/2", "--values", "3",
      "--denominator", "7", "--partial", "--formula", "X1 ^ X2", "!(", "--mode", "super", "lattice", "--assign",
      "X1=1/3,X2=1", "--truth", "a=1/2", "--allow-degenerate", "--threads", "2", "", "=", ",", "-", "--"};
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary.size() - 1);
  std::uniform_int_distribution<int> length(0, 8);
  for (int i = 0; i < 600; ++i) {
    std::vector<std::string> args;
    for (int k = length(rng); k > 0; --k) args.push_back(vocabulary[pick(rng)]);
    const Report r = run(args);
    EXPECT_TRUE(r.exit_code == kExitOk || r.exit_code == kExitViolation || r.exit_code == kExitUsage);
    EXPECT_FALSE(render(r).empty());
  }
}

} // namespace
} // namespace bivalence::cli
