#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "cli/json_writer.hpp"
#include "cli/report.hpp"
#include "cli/run.hpp"

using namespace gboson::cli;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gboson");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  RunResult r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() /
                       ("gboson_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
  fs::create_directories(dir);
  return dir;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (std::size_t pos = 0; (pos = text.find("\r\n", pos)) != std::string::npos; pos += 2) ++n;
  return n;
}

}  // namespace

TEST(CliConfig, ParsesKeyValues) {
  const auto kv = parse_key_values("# comment\nq = 1.5\n\nalpha=3  # trailing\n");
  EXPECT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("q"), "1.5");
  EXPECT_EQ(kv.at("alpha"), "3");
  EXPECT_THROW(parse_key_values("no equals sign\n"), ConfigError);
}

TEST(CliConfig, ApplySettingAndValidate) {
  RunConfig c;
  apply_setting(c, "q_scan", "1.5,1.3");
  ASSERT_EQ(c.q_scan.size(), 2u);
  EXPECT_DOUBLE_EQ(c.q_scan[1], 1.3);
  apply_setting(c, "dim", "5");
  EXPECT_EQ(c.dim, 5);
  EXPECT_THROW(apply_setting(c, "unknown", "1"), ConfigError);
  EXPECT_THROW(apply_setting(c, "dim", "five"), ConfigError);
  c.q = 1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c.q = 1.3;
  c.q_scan = {1.0};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(CliConfig, FlagsOverrideConfigFile) {
  const fs::path dir = scratch_dir();
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << "q = 1.7\norder = 1\n";
  const RunResult r = run_cli({"structure", "--config", cfg.string(), "--q", "1.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["params"]["q"].get<double>(), 1.4);
  EXPECT_EQ(j["command"], "structure");
}

TEST(CliJson, SeventeenDigitsAndNull) {
  EXPECT_EQ(JsonWriter::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(JsonWriter::format_double(2.0), "2.0");
  EXPECT_EQ(JsonWriter::format_double(std::nan("")), "null");
  JsonWriter w;
  w.begin_object().field("x", 1.0 / 3.0).field("s", "a\"b").end_object();
  const auto j = nlohmann::json::parse(w.str());
  EXPECT_EQ(j["x"].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(j["s"], "a\"b");
}

TEST(CliCsv, QuotingAndLineEndings) {
  CsvTable t({"name", "value"});
  t.add_row({"plain", CsvTable::cell(0.5)});
  t.add_row({"with,comma", "say \"hi\""});
  EXPECT_EQ(t.str(), "name,value\r\nplain,0.5\r\n\"with,comma\",\"say \"\"hi\"\"\"\r\n");
  EXPECT_THROW(t.add_row({"short"}), std::invalid_argument);
}

TEST(CliRun, ExitCodes) {
  EXPECT_EQ(run_cli({"structure", "--order", "1"}).code, 0);
  EXPECT_EQ(run_cli({"structure", "--q", "1"}).code, 2);
  EXPECT_EQ(run_cli({"structure", "--q", "-1"}).code, 2);
  EXPECT_EQ(run_cli({"structure", "--alpha", "0"}).code, 2);
  EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  // A check that fails its tolerance yields exit code 1.
  EXPECT_EQ(run_cli({"structure", "--order", "1", "--tol", "1e-300"}).code, 1);
  EXPECT_EQ(run_cli({"structure", "--tol", "0"}).code, 2);
}

TEST(CliRun, OrderZeroIsVacuous) {
  const RunResult r = run_cli({"hopf-verify", "--order", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["status"], "pass");
    EXPECT_NE(c["note"].get<std::string>().find("order-0"), std::string::npos);
  }
}

TEST(CliRun, SmallBipartiteDimensionWarns) {
  const RunResult r = run_cli({"bipartite", "--dim", "2"});
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["warnings"].empty());
}

TEST(CliRun, CoherentCsvAtClassicalGuard) {
  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "moments.csv";
  const RunResult r = run_cli({"coherent", "--q", "1.0000001", "--csv", csv.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string text = read_file(csv);
  EXPECT_EQ(text.rfind("n,I_n,box_factorial,ratio\r\n", 0), 0u);
  EXPECT_EQ(count_lines(text), 1 + 9);
}

TEST(CliRun, BipartiteSingleQ) {
  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "bp.csv";
  const fs::path json = dir / "bp.json";
  const RunResult r = run_cli({"bipartite", "--q", "1.3", "--csv", csv.string(), "--out", json.string()});
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(count_lines(read_file(csv)), 2);
  const auto j = nlohmann::json::parse(read_file(json));
  EXPECT_EQ(j["command"], "bipartite");
  EXPECT_TRUE(j["divergences"].is_array());
}

TEST(CliRun, DeterministicOutput) {
  const std::vector<std::string> args = {"dual-basis", "--order", "3", "--samples", "10", "--seed", "9"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("wall_seconds"), std::string::npos);
  std::vector<std::string> timed = args;
  timed.push_back("--timings");
  EXPECT_NE(run_cli(timed).out.find("wall_seconds"), std::string::npos);
}

TEST(CliRun, ReportShape) {
  const RunResult r = run_cli({"structure", "--order", "2"});
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"command", "params", "seed", "settings", "checks", "divergences", "warnings", "passed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["params"]["effective_q"].get<double>(), 1.3);
}

#ifdef GBOSON_TOOL_PATH
TEST(CliBinary, ExitCodeFromExecutable) {
  const std::string tool = GBOSON_TOOL_PATH;
  EXPECT_EQ(std::system((tool + " structure --order 1 > /dev/null").c_str()), 0);
  const int status = std::system((tool + " structure --q 1 > /dev/null 2>&1").c_str());
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
#endif
