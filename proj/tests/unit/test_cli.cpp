#include <gtest/gtest.h>

#include <copfaces_cli/commands.hpp>

#include "fixtures.hpp"

namespace copfaces::cli {
namespace {

const std::string kProblems = COPFACES_PROBLEMS_DIR;

ProblemFile load(const std::string& name) { return read_problem_file(kProblems + "/" + name + ".json"); }

std::string report_value(const Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c.report) {
    if (k == key) return v;
  }
  return {};
}

TEST(ProblemFile, RoundTripIsByteIdentical) {
  for (const char* name : {"horn", "neg_identity", "pair_set", "worked_dual", "exposed_face", "lincop_f4"}) {
    const auto a = load(name);
    const std::string text = serialize(a);
    EXPECT_EQ(serialize(parse_problem(text)), text) << name;
  }
}

TEST(ProblemFile, RejectsFloatsWithPosition) {
  const std::string text = "{\n  \"p\": 2,\n  \"kind\": \"matrix\",\n  \"matrix\": [[1.5, 0], [0, 1]]\n}\n";
  try {
    parse_problem(text);
    FAIL() << "accepted a float";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(ProblemFile, RejectsAsymmetricMatrixWithPath) {
  const std::string text = R"({"p": 2, "kind": "matrix", "matrix": [["1", "2"], ["3", "1"]]})";
  try {
    parse_problem(text);
    FAIL() << "accepted an asymmetric matrix";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/matrix"), std::string::npos) << e.what();
  }
}

TEST(ProblemFile, RejectsMalformedJson) {
  EXPECT_THROW(parse_problem("{\"p\": 2,"), ParseError);
  EXPECT_THROW(parse_problem(R"({"p": 2, "kind": "nonsense"})"), ParseError);
}

TEST(Digest, DependsOnCanonicalText) {
  const auto h = load("horn");
  EXPECT_EQ(inputs_digest(h), inputs_digest(parse_problem(serialize(h))));
  EXPECT_NE(inputs_digest(h), inputs_digest(load("neg_identity")));
  EXPECT_EQ(inputs_digest(h).rfind("fnv1a64:", 0), 0U);
}

TEST(Commands, CheckCopHorn) {
  const auto c = cmd_check_cop(load("horn"), Options{});
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_EQ(report_value(c, "result"), "copositive, min 0, 5 minimal zeros");
}

TEST(Commands, CheckCopNegativeIdentity) {
  const auto c = cmd_check_cop(load("neg_identity"), Options{});
  EXPECT_EQ(c.exit_code, 2);
  EXPECT_EQ(report_value(c, "witness"), "(1, 0)");
}

TEST(Commands, ZerosRefuseNonCopositiveInput) {
  const auto c = cmd_zeros(load("neg_identity"), Options{});
  EXPECT_EQ(c.exit_code, 2);
}

TEST(Commands, WorkedDualIsRefutedInG) {
  const auto c = cmd_dual(load("worked_dual"), Options{});
  EXPECT_EQ(c.exit_code, 0);
  const std::string text = c.to_text();
  EXPECT_NE(text.find("contradiction at entry (1,2): required 1, derivable 0"), std::string::npos) << text;
}

TEST(Commands, RegularizeAndSolveAgree) {
  const auto problem = load("lincop_f4");
  const auto reg = cmd_regularize(problem, Options{});
  EXPECT_EQ(reg.exit_code, 0);
  const auto solve = cmd_solve(problem, Options{});
  EXPECT_EQ(solve.exit_code, 0);
  EXPECT_EQ(report_value(solve, "values_agree"), "true");
}

TEST(Commands, UnknownNameThrows) { EXPECT_THROW(run_command("frobnicate", load("horn"), Options{}), Error); }

TEST(Replay, EveryCommandReplaysCleanly) {
  const std::vector<std::pair<std::string, std::string>> runs{
      {"check-cop", "horn"}, {"minimal-zeros", "pair_set"}, {"face", "exposed_face"},
      {"dual", "worked_dual"}, {"regularize", "lincop_f4"},   {"solve", "lincop_f4"}};
  for (const auto& [cmd, file] : runs) {
    const auto problem = load(file);
    const auto cert = run_command(cmd, problem, Options{});
    const auto replay = replay_transcript(problem, cert.to_json());
    EXPECT_TRUE(replay.ok()) << cmd << ": " << (replay.mismatches.empty() ? "" : replay.mismatches.front());
    EXPECT_GT(replay.checked, 0U) << cmd;
    const auto verify = cmd_verify(problem, cert.to_json(), Options{});
    EXPECT_EQ(verify.exit_code, 0) << cmd;
  }
}

TEST(Replay, DetectsTampering) {
  const auto problem = load("horn");
  Json doc = cmd_check_cop(problem, Options{}).to_json();
  ASSERT_FALSE(doc["transcript"].empty());
  doc["transcript"][0]["value"] = "7/1";
  EXPECT_FALSE(replay_transcript(problem, doc).ok());
  Json other = cmd_check_cop(problem, Options{}).to_json();
  other["inputs_digest"] = "fnv1a64:0000000000000000";
  EXPECT_FALSE(replay_transcript(problem, other).ok());
}

TEST(Determinism, SameSeedSameBytes) {
  Options o;
  o.seed = 17;
  for (const char* cmd : {"check-cop", "dual", "solve"}) {
    const std::string file = std::string(cmd) == "check-cop" ? "horn" : (std::string(cmd) == "dual" ? "exposed_face" : "lincop_f4");
    const auto problem = load(file);
    EXPECT_EQ(dump_canonical(run_command(cmd, problem, o).to_json()), dump_canonical(run_command(cmd, problem, o).to_json()))
        << cmd;
  }
}

}  // namespace
}  // namespace copfaces::cli
