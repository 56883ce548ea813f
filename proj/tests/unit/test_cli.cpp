#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sts/cli.hpp"
#include "sts/constructions.hpp"
#include "sts/io.hpp"
#include "sts/report.hpp"

namespace fs = std::filesystem;
using namespace sts;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sts_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenWritesSystems) {
  ASSERT_EQ(run({"gen", "--construction", "bose", "--n", "27", "-o", path("b27.sts")}).code, 0);
  const StsDocument doc = read_sts_file(path("b27.sts"));
  EXPECT_EQ(doc.system.size(), 117u);
  EXPECT_EQ(doc.system, bose(27).system());

  const Result sk = run({"gen", "--construction", "skolem", "--n", "7"});
  EXPECT_EQ(sk.code, 0);
  std::istringstream in(sk.out);
  EXPECT_EQ(read_sts(in).system.size(), 7u);

  EXPECT_EQ(run({"gen", "--construction", "bose", "--n", "13"}).code, cli::kConstructionFailure);
  EXPECT_EQ(run({"gen", "--construction", "nope"}).code, cli::kParameterFailure);
  EXPECT_EQ(run({"gen", "--construction", "bose", "--n", "21", "--quasigroup", "random",
                 "--qseed", "4"}).code,
            0);
}

TEST_F(CliTest, AnalyzeFanoReport) {
  run({"gen", "--construction", "fano", "-o", path("f.sts")});
  const Result r = run({"analyze", "-i", path("f.sts"), "--param", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["schema"], "sts-report/1");
  EXPECT_EQ(report["parameters"]["alpha_star3"]["value"], 1);
  EXPECT_EQ(report["parameters"]["alpha_star3"]["exact"], true);
  EXPECT_EQ(report["parameters"]["mc3"]["value"], 6);
  EXPECT_EQ(report["parameters"]["mc3"]["exact"], true);
  ASSERT_FALSE(report["verdicts"].empty());
  for (const auto& v : report["verdicts"]) EXPECT_TRUE(v["pass"].get<bool>()) << v.dump();
  EXPECT_TRUE(cli::verdicts_consistent(report));
  // Progress stays on stderr.
  EXPECT_NE(r.err.find("mc3"), std::string::npos);

  // Identical invocations give identical bytes.
  EXPECT_EQ(run({"analyze", "-i", path("f.sts"), "--param", "all"}).out, r.out);
}

TEST_F(CliTest, AnalyzeS9AndBudgetedBose) {
  run({"gen", "--construction", "s9", "-o", path("s9.sts")});
  const auto s9r = nlohmann::json::parse(run({"analyze", "-i", path("s9.sts"), "--param", "mc3"}).out);
  EXPECT_EQ(s9r["parameters"]["mc3"]["value"], 7);
  EXPECT_EQ(s9r["parameters"]["mc3"]["exact"], true);

  run({"gen", "--construction", "bose", "--n", "27", "-o", path("b27.sts")});
  const Result r = run({"analyze", "-i", path("b27.sts"), "--param", "mc3", "--max-seconds", "1"});
  ASSERT_EQ(r.code, 0);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["parameters"]["mc3"]["exact"], false);
  EXPECT_LE(report["parameters"]["mc3"]["value"].get<int>(), 21);
}

TEST_F(CliTest, VerdictTamperingIsDetected) {
  run({"gen", "--construction", "fano", "-o", path("f.sts")});
  auto report = nlohmann::json::parse(run({"analyze", "-i", path("f.sts")}).out);
  ASSERT_TRUE(cli::verdicts_consistent(report));
  report["parameters"]["mc3"]["value"] = 3;
  EXPECT_FALSE(cli::verdicts_consistent(report));
}

TEST_F(CliTest, AnalyzeInputErrors) {
  EXPECT_EQ(run({"analyze", "-i", path("missing.sts")}).code, cli::kInputFailure);
  std::ofstream(path("bad.sts")) << "3 1\n0 1\n";
  EXPECT_EQ(run({"analyze", "-i", path("bad.sts")}).code, cli::kInputFailure);
}

TEST_F(CliTest, ColorSchemes) {
  run({"gen", "--construction", "s9", "-o", path("s9.sts")});
  run({"gen", "--construction", "bose", "--n", "27", "-o", path("b27.sts")});
  run({"gen", "--construction", "fano", "-o", path("f.sts")});

  const Result hole = run({"color", "-i", path("s9.sts"), "--scheme", "hole", "-o", path("s9.col")});
  ASSERT_EQ(hole.code, 0) << hole.err;
  EXPECT_NE(hole.out.find("max_component,7"), std::string::npos);
  const StsDocument doc = read_sts_file(path("s9.sts"));
  std::ifstream col(path("s9.col"));
  const EdgeColoring c = read_coloring(col, doc.system);
  EXPECT_EQ(largest_mono_component(c).size, 7);

  const Result bose = run({"color", "-i", path("b27.sts"), "--scheme", "bose", "-o", path("b.col")});
  ASSERT_EQ(bose.code, 0);
  EXPECT_NE(bose.out.find("span_bound,21"), std::string::npos);

  EXPECT_EQ(run({"color", "-i", path("f.sts"), "--scheme", "bose"}).code, cli::kSchemeFailure);
  const Result fano_bi = run({"color", "-i", path("f.sts"), "--scheme", "bicolor", "-o", path("fb.col")});
  EXPECT_EQ(fano_bi.code, 0);
  EXPECT_NE(fano_bi.out.find("bicoloring_sizes,1,2,4"), std::string::npos);
  const Result bi = run({"color", "-i", path("s9.sts"), "--scheme", "bicolor", "-o", path("bi.col")});
  EXPECT_EQ(bi.code, 0);
  EXPECT_NE(bi.out.find("bicoloring_sizes,1,4,4"), std::string::npos);

  std::ofstream(path("h.txt")) << "hole 3 1\n0\n1\n2\n";
  EXPECT_EQ(run({"color", "-i", path("s9.sts"), "--scheme", "hole", "--hole-file", path("h.txt")}).code,
            cli::kSchemeFailure);
}

TEST_F(CliTest, RandomAndExperiments) {
  const Result tr = run({"random", "--process", "triangle-removal", "--n", "19", "--m", "28",
                         "--seed", "7"});
  ASSERT_EQ(tr.code, 0);
  std::istringstream in(tr.out);
  EXPECT_TRUE(read_sts(in).system.is_linear());
  EXPECT_EQ(run({"random", "--process", "triangle-removal", "--n", "7", "--m", "9"}).code,
            cli::kParameterFailure);
  EXPECT_EQ(run({"random", "--process", "binomial", "--n", "7", "--p", "2"}).code,
            cli::kParameterFailure);
  EXPECT_EQ(run({"random", "--process", "sts", "--n", "8"}).code, cli::kParameterFailure);
  EXPECT_EQ(run({"random", "--process", "sts", "--n", "19", "--seed", "3"}).code, 0);

  const Result d = run({"experiment", "discrepancy", "--n", "13", "--samples", "100", "--seed", "1",
                        "--csv", path("d13.csv")});
  ASSERT_EQ(d.code, 0) << d.err;
  const std::string csv = slurp(path("d13.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 201);
  EXPECT_TRUE(fs::exists(path("d13.csv.meta.json")));
  run({"experiment", "discrepancy", "--n", "13", "--samples", "100", "--seed", "1", "--csv",
       path("again.csv"), "--jobs", "3"});
  EXPECT_EQ(slurp(path("again.csv")), csv);
  EXPECT_EQ(run({"experiment", "discrepancy", "--n", "12"}).code, cli::kParameterFailure);

  const Result cdr = run({"experiment", "cdr", "--kmax", "12"});
  ASSERT_EQ(cdr.code, 0);
  EXPECT_NE(cdr.out.find("\n1,2160,2241,"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}
