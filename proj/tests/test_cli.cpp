#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wldu/cli.hpp"

using namespace wldu;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-timing");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, DuOnBinomialOutlier) {
  const CliRun r = run({"du", "--p", "3671", "--binomial", "--s", "4", "--b", "1734"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has_line(r.out, "delta=13"));
  EXPECT_TRUE(has_line(r.out, "pp=true"));
  EXPECT_TRUE(has_line(r.out, "theorem=1.2 bound=13 holds=true tight=true"));
  EXPECT_TRUE(has_line(r.out, "verdict=holds"));
}

TEST(Cli, EnginesReportTheSameDelta) {
  std::string delta_line;
  for (const char* engine : {"general", "fast", "wanlidl", "auto"}) {
    const CliRun r = run({"du", "--p", "43", "--binomial", "--s", "2", "--b", "7", "--engine", engine});
    ASSERT_EQ(r.code, kExitOk) << engine << r.err;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("delta=", 0) == 0) {
        if (delta_line.empty()) delta_line = line;
        EXPECT_EQ(line, delta_line) << engine;
      }
    }
  }
  EXPECT_FALSE(delta_line.empty());
}

TEST(Cli, DuDenseAndWanLidlForms) {
  const CliRun planar = run({"du", "--p", "7", "--poly", "0,0,1"});
  EXPECT_EQ(planar.code, kExitOk);
  EXPECT_TRUE(has_line(planar.out, "delta=1"));
  const CliRun linear = run({"du", "--p", "7", "--poly", "0,1"});
  EXPECT_TRUE(has_line(linear.out, "delta=7"));
  const CliRun wl = run({"du", "--p", "11", "--h", "3,1", "--s", "2", "--d", "2"});
  EXPECT_EQ(wl.code, kExitOk);
  EXPECT_TRUE(has_line(wl.out, "delta=3"));
  EXPECT_TRUE(has_line(wl.out, "form=wanlidl"));
}

TEST(Cli, DuReportsViolationWithExitOne) {
  const CliRun r = run({"du", "--p", "101", "--h", "100,1", "--s", "2", "--d", "2"});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(has_line(r.out, "verdict=violated"));
}

TEST(Cli, IsPp) {
  const CliRun yes = run({"is-pp", "--p", "11", "--binomial", "--s", "2", "--b", "3"});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_TRUE(has_line(yes.out, "pp=true"));
  EXPECT_TRUE(has_line(yes.out, "bruteforce=true"));
  const CliRun no = run({"is-pp", "--p", "7", "--h", "3,1", "--s", "2", "--d", "2"});
  EXPECT_EQ(no.code, kExitOk);
  EXPECT_TRUE(has_line(no.out, "pp=false"));
  EXPECT_TRUE(has_line(no.out, "failed=WL3"));
  const CliRun wl2 = run({"is-pp", "--p", "7", "--h", "6,1", "--s", "1", "--d", "2", "--no-bruteforce"});
  EXPECT_TRUE(has_line(wl2.out, "failed=WL2"));
  EXPECT_EQ(wl2.out.find("bruteforce="), std::string::npos);
}

TEST(Cli, Spectrum) {
  const CliRun r = run({"spectrum", "--p", "7", "--poly", "0,0,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has_line(r.out, "solutions=1 cells=42"));
  EXPECT_TRUE(has_line(r.out, "weighted_sum=42"));
}

TEST(Cli, SweepFormats) {
  const CliRun wide = run({"sweep", "--s", "2", "--to", "23", "--format", "wide"});
  EXPECT_EQ(wide.code, kExitOk);
  EXPECT_EQ(wide.out.substr(0, 24), "p,d2,d3,d4,d5\n7,0,1,0,0\n");
  const CliRun longform = run({"sweep", "--s", "2", "--to", "23"});
  EXPECT_EQ(longform.out.substr(0, 20), "p,delta,count\n7,3,1\n");
  const CliRun json = run({"sweep", "--s", "2", "--to", "23", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["rows"].size(), 4U);
  const CliRun empty = run({"sweep", "--from", "4", "--to", "6"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_TRUE(empty.out.empty());
}

TEST(Cli, SweepIsDeterministicAcrossJobs) {
  const CliRun one = run({"sweep", "--s", "4", "--to", "600", "--jobs", "1", "--engine", "both"});
  const CliRun three = run({"sweep", "--s", "4", "--to", "600", "--jobs", "3", "--engine", "both"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, SweepWritesOutputFile) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "wldu_cli_sweep.csv";
  std::filesystem::remove(path);
  const CliRun r = run({"sweep", "--s", "2", "--to", "23", "--format", "wide", "--output", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str().substr(0, 14), "p,d2,d3,d4,d5\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyBounds) {
  const CliRun corollary = run({"verify-bounds", "--theorem", "1.3", "--to", "100"});
  EXPECT_EQ(corollary.code, kExitOk);
  EXPECT_TRUE(has_line(corollary.out, "status=pass"));
  const CliRun binomial = run({"verify-bounds", "--theorem", "1.2", "--to", "200"});
  EXPECT_EQ(binomial.code, kExitOk);
  const CliRun bad = run({"verify-bounds", "--theorem", "2.7"});
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Cli, LemmaCheck) {
  const CliRun r = run({"lemma-check", "--p", "13", "--s", "3", "--d", "2", "--h", "2,1", "--a", "1", "--c", "0",
                     "--lambda", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has_line(r.out, "case=diagonal"));
  EXPECT_TRUE(has_line(r.out, "roots=5,7"));
  EXPECT_TRUE(has_line(r.out, "status=pass"));
  const CliRun random = run({"lemma-check", "--random", "50", "--seed", "3"});
  EXPECT_EQ(random.code, kExitOk);
  const CliRun not_in_h = run({"lemma-check", "--p", "13", "--s", "3", "--d", "2", "--h", "2,1", "--a", "1", "--c", "0",
                            "--lambda", "5"});
  EXPECT_EQ(not_in_h.code, kExitUsage);
}

TEST(Cli, CorollaryCheck) {
  const CliRun one = run({"corollary-check", "--p", "11"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_TRUE(has_line(one.out, "q=11 plus_pp=true plus_delta=3 minus_pp=true minus_delta=3 holds=true"));
  const CliRun ext = run({"corollary-check", "--p", "11", "--e", "3"});
  EXPECT_EQ(ext.code, kExitOk);
  EXPECT_EQ(run({"corollary-check", "--p", "13"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"du", "--p", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"du", "--p", "15", "--poly", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"du", "--p", "7", "--poly", "1,x"}).code, kExitUsage);
  EXPECT_EQ(run({"du", "--p", "-7", "--poly", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--to", "50", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--to", "50", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--s", "3", "--to", "50"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep"}).code, kExitUsage);
}

TEST(Cli, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE((r.out + r.err).find("sweep"), std::string::npos);
}

TEST(Cli, TimingLineGoesToStderr) {
  std::ostringstream out, err;
  const int code = run_cli({"du", "--p", "7", "--poly", "0,0,1"}, out, err);
  EXPECT_EQ(code, kExitOk);
  EXPECT_NE(err.str().find("elapsed_ms="), std::string::npos);
  EXPECT_EQ(out.str().find("elapsed_ms="), std::string::npos);
}
