#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "patcomp/io/parser.hpp"
#include "support.hpp"

namespace patcomp {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome patc(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpusPath(const std::string& name) { return std::string(PATCOMP_CORPUS_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("patc_test_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, NormalizeExampleOne) {
  auto r = patc({"normalize", corpusPath("example1.pat"), "--pattern", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "f(x,b) + f(x,f(y1,y2))\n");
  r = patc({"normalize", corpusPath("example1.pat"), "--pattern", "1", "--as"});
  EXPECT_EQ(r.out, "f(x,y@b) + f(x,y@f(y1,y2))\n");
}

TEST(Cli, NormalizeRejectsMissingPattern) {
  auto r = patc({"normalize", corpusPath("example1.pat"), "--pattern", "99"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, GlobalFlagsReachTheNormalizer) {
  auto on = patc({"normalize", corpusPath("redundant.pat")});
  auto off = patc({"--no-opt-cut", "normalize", corpusPath("redundant.pat")});
  EXPECT_EQ(on.code, 0);
  EXPECT_EQ(off.code, 0);
  auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), '+') + 1; };
  EXPECT_EQ(count(on.out), 2);
  EXPECT_EQ(count(off.out), 6);
  auto prefixed = patc({"normalize", corpusPath("example1.pat"), "--pattern", "3", "--seed-prefix", "w"});
  EXPECT_NE(prefixed.out.find("w"), std::string::npos) << prefixed.out;
}

TEST(Cli, CheckReportsUselessRule) {
  auto r = patc({"check", corpusPath("useless.pat")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("useless: rule 4; exhaustive: no; witnesses: <a,f(", 0), 0u) << r.out;
}

TEST(Cli, CheckRequireExhaustive) {
  auto ok = patc({"check", corpusPath("equation_lists.pat"), "--require-exhaustive"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(ok.out, "useless: none; exhaustive: yes\n");
  auto partial = patc({"check", corpusPath("non_exhaustive.pat")});
  EXPECT_EQ(partial.code, 0);
  auto strict = patc({"check", corpusPath("non_exhaustive.pat"), "--require-exhaustive"});
  EXPECT_EQ(strict.code, 1);
}

TEST(Cli, CheckPrefixesHeadsWhenSeveral) {
  auto r = patc({"check", corpusPath("lists.pat")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("last: useless: none"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("drop: useless: none"), std::string::npos) << r.out;
}

TEST(Cli, Disambiguate) {
  auto r = patc({"disambiguate", corpusPath("equation_lists.pat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "P1 = <x,b> + <x,f(y1,y2)>\nP2 = <a,a> + <b,a>\nP3 = <f(x,y),a>\n");
}

TEST(Cli, MinimizePrintsStats) {
  auto r = patc({"minimize", corpusPath("redundant.pat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("output 2"), std::string::npos) << r.out;
}

TEST(Cli, CompileEcoLabel) {
  auto r = patc({"compile", corpusPath("eco.pat"), "--mode", "order", "--minimize", "--format", "native"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto prog = io::parseProblem(r.out).program;
  EXPECT_EQ(prog.mode, ProgramMode::Set);
  EXPECT_EQ(prog.rules.size(), 9u);
  EXPECT_EQ(testing::ruleKeys(prog),
            testing::ruleKeys(prog.signature, {
                                                  "paint(car(electric,sedan)) -> blue",
                                                  "paint(car(electric,minivan)) -> blue",
                                                  "paint(car(hybrid,sedan)) -> white",
                                                  "paint(car(hybrid,minivan)) -> white",
                                                  "paint(car(gas,sedan)) -> white",
                                                  "paint(car(gas,minivan)) -> white",
                                                  "paint(car(diesel,u)) -> red",
                                                  "paint(car(u,suv)) -> red",
                                                  "paint(truck(u,v)) -> red",
                                              }));
}

TEST(Cli, CompileTpdbToFile) {
  auto path = std::filesystem::temp_directory_path() / "patc_test_app_plus.trs";
  auto r = patc({"compile", corpusPath("app_plus.pat"), "--format", "tpdb", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "(VAR z x y1 y2)\n(RULES\n  phi(z,a) -> z\n  phi(x,b) -> b\n  phi(x,f(y1,y2)) -> f(y1,y2)\n)");
  std::filesystem::remove(path);
}

TEST(Cli, CompileAllModeRefusesTpdb) {
  EXPECT_EQ(patc({"compile", corpusPath("app_plus.pat"), "--mode", "all", "--format", "tpdb"}).code, 2);
  auto r = patc({"compile", corpusPath("app_plus.pat"), "--mode", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rules ordered"), std::string::npos);
}

TEST(Cli, OracleAgreesOnTheCorpus) {
  for (auto name : {"example1.pat", "equation_lists.pat", "eco.pat", "lists.pat", "elim.pat"}) {
    auto r = patc({"oracle", corpusPath(name), "--depth", "3"});
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
    EXPECT_NE(r.out.find(" 0 discrepancies"), std::string::npos) << r.out;
  }
}

TEST(Cli, ParseErrorsExitTwo) {
  auto path = scratch("bad.pat", "sort U = a | b;\ndef g : U,U -> U;\nrules ordered\n  g(x,x) -> x;\n");
  auto r = patc({"check", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":4:7:"), std::string::npos) << r.err;
  std::filesystem::remove(path);
  EXPECT_EQ(patc({"check", "/nonexistent/file.pat"}).code, 2);
}

TEST(Cli, FuelExhaustionExitsThree) {
  auto r = patc({"--fuel", "2", "normalize", corpusPath("example1.pat")});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(patc({}).code, 2);
  EXPECT_EQ(patc({"compile", corpusPath("eco.pat"), "--mode", "sideways"}).code, 2);
  EXPECT_EQ(patc({"--help"}).code, 0);
}

}  // namespace
}  // namespace patcomp
