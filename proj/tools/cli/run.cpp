#include "cli/run.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace gboson::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

using Command = std::function<CommandOutput(const RunConfig&)>;

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"--q", "q", "deformation parameter q > 0, q != 1"},
    {"--alpha", "alpha", "alpha (nonzero)"},
    {"--beta", "beta", "beta"},
    {"--guard", "guard", "classical guard radius around q = 1"},
    {"--dim", "dim", "truncation dimension D"},
    {"--order", "order", "series order or index range"},
    {"--tol", "tol", "override every check tolerance"},
    {"--seed", "seed", "random seed for sampled checks"},
    {"--out", "out", "JSON report path (default stdout)"},
    {"--csv", "csv", "CSV dataset path"},
    {"--samples", "samples", "number of random duality samples"},
    {"--n-max", "n_max", "largest moment index"},
    {"--abs-tol", "abs_tol", "absolute quadrature tolerance"},
    {"--r-max", "r_max", "largest quadrature radius"},
    {"--grouplike-degree", "grouplike_degree", "degree of the represented T check"},
    {"--zeta", "zeta", "bipartite eigenvalue"},
    {"--zeta1", "zeta1", "bipartite ansatz parameter zeta1"},
    {"--zeta2", "zeta2", "bipartite ansatz parameter zeta2"},
    {"--delta", "delta", "geometric boundary ratio in (0, 1]"},
    {"--q-scan", "q_scan", "comma separated q values for the bipartite scan"},
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized boson Hopf algebra verification tool"};
  app.require_subcommand(1);

  std::map<std::string, std::string> raw;
  std::vector<std::pair<const Flag*, CLI::Option*>> options;
  for (const Flag& f : kFlags) {
    options.emplace_back(&f, app.add_option(f.name, raw[f.key], f.help));
  }
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file; flags override it");
  bool timings = false;
  auto* timings_flag = app.add_flag("--timings", timings, "record wall times in the report");

  const std::pair<const char*, Command> commands[] = {
      {"hopf-verify", cmd_hopf_verify}, {"structure", cmd_structure},
      {"dual-basis", cmd_dual_basis},   {"tmatrix", cmd_tmatrix},
      {"coherent", cmd_coherent},       {"bipartite", cmd_bipartite},
  };
  std::map<const CLI::App*, Command> dispatch;
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " checks");
    sub->fallthrough();
    dispatch.emplace(sub, command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfig;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) load_config_file(config, config_path);
    for (const auto& [flag, option] : options) {
      if (option->count() > 0) apply_setting(config, flag->key, raw[flag->key]);
    }
    if (timings_flag->count() > 0) config.timings = timings;
    config.validate();
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  const Command& command = dispatch.at(app.get_subcommands().front());
  std::optional<CommandOutput> result;
  try {
    result.emplace(command(config));
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  try {
    const std::string json = result->report.to_json(config.timings);
    if (config.out.empty()) {
      out << json;
    } else {
      write_file(config.out, json);
    }
    if (!config.csv.empty() && result->table) write_file(config.csv, result->table->str());
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
  for (const auto& w : result->report.warnings()) err << "warning: " << w << "\n";
  return result->report.passed() ? kExitPass : kExitFail;
}

}  // namespace gboson::cli
