#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prandtl/pipeline.hpp"

using namespace prandtl;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "prandtl_pipeline_tests";

fs::path example(const std::string& name) { return fs::path(PRANDTL_SOURCE_DIR) / "examples_cfg" / name; }

int lab(const std::string& args, const std::string& log = "/dev/null") {
  const std::string cmd = std::string(PRANDTL_LAB_EXE) + " " + args + " >" + log + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_config(const std::string& name, const std::string& text) {
  fs::create_directories(kWork);
  const fs::path p = kWork / name;
  std::ofstream(p) << text;
  return p;
}

/// One solve of the invariant run shared by the check/certify tests.
const fs::path& solved_run() {
  static const fs::path dir = [] {
    const fs::path d = kWork / ("solve_" + std::to_string(::getpid()));
    EXPECT_EQ(lab("solve -c " + example("invariant_run.ini").string() + " -o " + d.string()), 0);
    return d;
  }();
  return dir;
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(lab(""), kExitUsage);
  EXPECT_EQ(lab("frobnicate"), kExitUsage);
  EXPECT_EQ(lab("constants -c /nonexistent.ini"), kExitUsage);
  EXPECT_EQ(lab("constants --bogus"), kExitUsage);
  EXPECT_EQ(lab("certify --inject nothing"), kExitUsage);
  EXPECT_EQ(lab("--help"), 0);
}

TEST(Cli, ConfigErrorNamesLine) {
  const fs::path cfg = write_config("bad.ini", "[params]\nmu = 0.02\n");
  const fs::path log = kWork / "bad.log";
  EXPECT_EQ(lab("constants -c " + cfg.string() + " -o " + (kWork / "bad").string(), log.string()), kExitUsage);
  EXPECT_NE(slurp(log).find("line 2: mu must lie in (0,1/100)"), std::string::npos) << slurp(log);
  EXPECT_FALSE(fs::exists(kWork / "bad"));
}

TEST(Cli, UnderflowingConstantsAreNumericalFailures) {
  const fs::path cfg = write_config("underflow.ini", "[params]\nX = 10\n");
  EXPECT_EQ(lab("check -c " + cfg.string() + " -o " + (kWork / "uf").string()), kExitDivergence);
}

TEST(Cli, ConstantsOutputs) {
  const fs::path out = kWork / "constants";
  ASSERT_EQ(lab("constants -o " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "constants.csv"));
  EXPECT_TRUE(fs::exists(out / "runtime.txt"));
  const Manifest m = Manifest::read(out / "manifest.txt");
  ASSERT_NE(m.get("constants.beta"), nullptr);
  EXPECT_NEAR(std::stod(*m.get("constants.beta")), 111.26666220798153, 1e-9);
  EXPECT_EQ(*m.get("result"), "pass");
  EXPECT_EQ(*m.get("output.constants.csv"), file_digest(out / "constants.csv"));
}

TEST(Cli, RepeatedRunsAreBitwiseIdentical) {
  const fs::path a = kWork / "det_a", b = kWork / "det_b";
  const std::string cfg = example("invariant_run.ini").string();
  ASSERT_EQ(lab("solve -c " + cfg + " -o " + a.string()), 0);
  ASSERT_EQ(lab("solve -c " + cfg + " -o " + b.string()), 0);
  for (const char* f : {"velocity.csv", "base.csv", "summary.csv", "manifest.txt"}) EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(Cli, CheckAndCertifyReuseStoredRun) {
  const std::string cfg = example("invariant_run.ini").string();
  const std::string run = solved_run().string();
  EXPECT_EQ(lab("check -c " + cfg + " --run " + run + " -o " + (kWork / "check").string()), 0);
  EXPECT_TRUE(fs::exists(kWork / "check" / "invariants.csv"));
  EXPECT_EQ(lab("certify -c " + cfg + " --run " + run + " -o " + (kWork / "certify").string()), 0);
  EXPECT_EQ(slurp(kWork / "check" / "invariants.csv").rfind("id,worst_margin,", 0), 0u);
}

TEST(Cli, InjectionFailsTheRun) {
  const std::string cfg = example("invariant_run.ini").string();
  const fs::path out = kWork / "inject";
  EXPECT_EQ(lab("certify -c " + cfg + " --run " + solved_run().string() + " --inject comparison -o " + out.string()), kExitFail);
  const Manifest m = Manifest::read(out / "manifest.txt");
  EXPECT_EQ(*m.get("result"), "fail");
}

TEST(Cli, StoredRunMustMatchConfig) {
  const fs::path cfg = write_config("other.ini", "[params]\nc0 = 0.25\nX = 0.1\n[grid]\nnx = 32\nny = 256\ndt = 0.002\n");
  EXPECT_EQ(lab("check -c " + cfg.string() + " --run " + solved_run().string() + " -o " + (kWork / "mismatch").string()),
            kExitUsage);
}

TEST(Pipeline, OptionCombinations) {
  std::ostringstream log, err;
  PipelineOptions o;
  o.subcommand = "constants";
  o.inject = "comparison";
  o.out = kWork / "combo";
  EXPECT_EQ(run_pipeline(o, log, err), kExitUsage);
  EXPECT_NE(err.str().find("--inject"), std::string::npos);
  o.inject.reset();
  o.run_dir = kWork;
  EXPECT_EQ(run_pipeline(o, log, err), kExitUsage);
  o.run_dir.clear();
  o.subcommand = "blasius";
  EXPECT_EQ(run_pipeline(o, log, err), kExitOk);
  EXPECT_NE(log.str().find("f''(0) = 0.33205"), std::string::npos);
}
