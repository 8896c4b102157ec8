#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "msi/parallel.hpp"
#include "msi_cli/cli.hpp"

namespace {

const std::string kData = MSI_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = msi::cli::run(args, out, err);
  msi::set_thread_count(0);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("msi_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Cli, IdealInfo) {
  const auto r = run({"ideal", "info", kData + "/ideals/x2y3.ideal"});
  EXPECT_EQ(r.code, msi::cli::kSuccess) << r.err;
  EXPECT_TRUE(contains(r.out, "ord0 2")) << r.out;
  EXPECT_TRUE(contains(r.out, "arn 6/5")) << r.out;
  EXPECT_TRUE(contains(r.out, "mult 6")) << r.out;
  EXPECT_TRUE(contains(r.out, "colength 6")) << r.out;

  const auto x = run({"ideal", "info", kData + "/ideals/x.ideal"});
  EXPECT_EQ(x.code, msi::cli::kSuccess);
  EXPECT_TRUE(contains(x.out, "mult not-cofinite")) << x.out;
  EXPECT_EQ(run({"ideal", "info", kData + "/ideals/zero.ideal"}).code, msi::cli::kSuccess);
}

TEST(Cli, InputErrorsExitWithTwo) {
  EXPECT_EQ(run({"ideal", "info", kData + "/no_such.ideal"}).code, msi::cli::kInputError);
  EXPECT_EQ(run({"ideal", "info", kData + "/regions/corner.region"}).code, msi::cli::kInputError);
  EXPECT_EQ(run({"system", "eval", kData + "/systems/kinked1.sys", "1,2,3"}).code, msi::cli::kInputError);
  EXPECT_EQ(run({"system", "invariants", kData + "/systems/corner.sys", "--direction", "0"}).code,
            msi::cli::kInputError);
  EXPECT_EQ(run({"bogus"}).code, msi::cli::kInputError);
  EXPECT_EQ(run({}).code, msi::cli::kInputError);
  const auto bad = run({"system", "eval", kData + "/no_such.sys", "1"});
  EXPECT_EQ(bad.code, msi::cli::kInputError);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, HelpSucceeds) { EXPECT_EQ(run({"--help"}).code, msi::cli::kSuccess); }

TEST(Cli, SystemEval) {
  const auto r = run({"system", "eval", kData + "/systems/ceiling_abs.sys", "--direction", "1,2,0"});
  EXPECT_EQ(r.code, msi::cli::kSuccess) << r.err;
  EXPECT_TRUE(contains(r.out, "generators 4")) << r.out;
  const auto positional = run({"system", "eval", kData + "/systems/ceiling_abs.sys", "(1, 2, 0)"});
  EXPECT_EQ(positional.out, r.out);
}

TEST(Cli, SystemInvariants) {
  const auto r = run({"system", "invariants", kData + "/systems/corner.sys", "--direction", "1", "--method", "both",
                      "--max", "6"});
  EXPECT_EQ(r.code, msi::cli::kSuccess) << r.err;
  EXPECT_TRUE(contains(r.out, "geometric 4/3")) << r.out;
  EXPECT_TRUE(contains(r.out, "geometric 2/3")) << r.out;
  EXPECT_TRUE(contains(r.out, "geometric 8/3")) << r.out;
  EXPECT_TRUE(contains(r.out, "certified yes")) << r.out;
  EXPECT_FALSE(contains(r.out, "certified no")) << r.out;
}

TEST(Cli, SystemVerify) {
  const auto ok = run({"system", "verify", kData + "/systems/kinked1.sys", "--window", "0", "4"});
  EXPECT_EQ(ok.code, msi::cli::kSuccess) << ok.err;
  EXPECT_TRUE(contains(ok.out, "violations 0")) << ok.out;
  const auto bad = run({"system", "verify", kData + "/systems/colon.sys", "--radius", "2"});
  EXPECT_EQ(bad.code, msi::cli::kVerificationFailure) << bad.out;
}

TEST(Cli, SystemConesWithExpectation) {
  const auto dir = scratch_dir();
  const auto csv = dir / "nef.csv";
  const auto r = run({"system", "cones", kData + "/systems/kinked1.sys", "--radius", "3", "--expect",
                      kData + "/cones/third_quadrant.cone", "--out", csv.string()});
  EXPECT_EQ(r.code, msi::cli::kSuccess) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "0 disagreements")) << r.out;
  EXPECT_TRUE(std::filesystem::exists(csv));
  EXPECT_FALSE(std::filesystem::exists(csv.string() + ".tmp"));
  const auto wrong = run({"system", "cones", kData + "/systems/ceiling_abs.sys", "--radius", "2", "--expect",
                          kData + "/cones/third_quadrant.cone"});
  EXPECT_EQ(wrong.code, msi::cli::kInputError);
}

TEST(Cli, ReproCommandsPass) {
  const auto dir = scratch_dir();
  const auto t1 = run({"repro", "thm1", "--radius", "3", "--max", "2", "--out", (dir / "t1.csv").string()});
  EXPECT_EQ(t1.code, msi::cli::kSuccess) << t1.out << t1.err;
  EXPECT_TRUE(contains(t1.out, "PASS"));

  const auto t2 = run({"repro", "thm2", "--kinks", "1", "--radius", "4", "--out", (dir / "t2.csv").string()});
  EXPECT_EQ(t2.code, msi::cli::kSuccess) << t2.out << t2.err;
  EXPECT_TRUE(contains(t2.out, "s0=5/4")) << t2.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "t2_kinks.csv"));
  EXPECT_TRUE(contains(slurp(dir / "t2_kinks.csv"), "5/4"));

  const auto ap = run({"repro", "appendix", "--kinks", "3", "--samples", "20"});
  EXPECT_EQ(ap.code, msi::cli::kSuccess) << ap.out << ap.err;
  EXPECT_TRUE(contains(ap.out, "kink points 3")) << ap.out;
}

TEST(Cli, OutputIsIndependentOfThreading) {
  const std::vector<std::string> args{"repro", "thm2", "--kinks", "2", "--radius", "3"};
  auto single = args;
  single.insert(single.begin(), "--single-thread");
  const auto a = run(args);
  const auto b = run(single);
  const auto c = run(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}
