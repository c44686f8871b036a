#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("minlen_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(MINLEN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json report(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "report.json")); }

}  // namespace

TEST(Cli, SpectrumWritesRequestedFormat) {
  const auto dir = scratch("spectrum");
  ASSERT_EQ(cli("spectrum --beta-tilde 0.5 --omega-tilde 0.1 --n-max 4 --format csv --out-dir " + dir.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "spectrum.csv"));
  EXPECT_FALSE(fs::exists(dir / "spectrum.json"));
  const auto r = report(dir);
  EXPECT_EQ(r["command"], "spectrum");
  EXPECT_EQ(r["status"], "pass");
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch("codes").string();
  EXPECT_EQ(cli("spectrum --beta-tilde 1.5 --out-dir " + dir), 2);
  EXPECT_EQ(cli("spectrum --beta-tilde 1.5 --diagnostic --out-dir " + dir), 0);
  EXPECT_EQ(cli("wavefunction --n 0 --tau -1 --out-dir " + dir), 2);
  EXPECT_EQ(cli("wavefunction --n 1 --tol 1e-30 --out-dir " + dir), 1);
  EXPECT_EQ(cli("--out-dir " + dir), 2);
  EXPECT_EQ(cli("spectrum --format xml --out-dir " + dir), 2);
  EXPECT_EQ(report(dir)["status"], "usage_error");
  EXPECT_EQ(cli("spectrum --n 3 --out-dir " + dir), 2);
}

TEST(Cli, VerifyAlgebraSnyderNeedsThreeDims) {
  const auto dir = scratch("verify").string();
  EXPECT_EQ(cli("verify-algebra --case snyder --dims 2 --out-dir " + dir), 2);
  EXPECT_EQ(cli("verify-algebra --case kempf --dims 2 --out-dir " + dir), 0);
  EXPECT_TRUE(fs::exists(fs::path(dir) / "verification.json"));
}

TEST(Cli, DeterministicRerun) {
  const auto a = scratch("det_a"), b = scratch("det_b");
  const std::string args = "wavefunction --beta-tilde 0.5 --n 2 --grid-size 257 --tol 1e-4 --out-dir ";
  ASSERT_EQ(cli(args + a.string()), 0);
  ASSERT_EQ(cli(args + b.string()), 0);
  for (const auto& e : fs::directory_iterator(a)) {
    const auto name = e.path().filename();
    if (name == "report.json") continue;
    EXPECT_EQ(slurp(e.path()), slurp(b / name)) << name;
  }
}

TEST(Cli, ConfigFileAndOverride) {
  const auto dir = scratch("config");
  {
    std::ofstream cfg(dir / "run.toml");
    cfg << "beta-tilde = 0.3\nn-max = 3\n";
  }
  ASSERT_EQ(cli("spectrum --config " + (dir / "run.toml").string() + " --n-max 2 --format json --out-dir " +
                dir.string()),
            0);
  const auto j = nlohmann::json::parse(slurp(dir / "spectrum.json"));
  EXPECT_EQ(j["levels"].size(), 5u);
  EXPECT_DOUBLE_EQ(j["beta_tilde"].get<double>(), 0.3);
}
