#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gboson/params.hpp"

namespace gboson::cli {

/// Invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings shared by all subcommands. Unset optionals take the
/// per-command default.
struct RunConfig {
  double q = 1.3;
  double alpha = 2.0;
  double beta = 1.0;
  double guard = DeformationParams::kDefaultGuard;
  std::optional<int> dim;
  std::optional<int> order;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  std::string out;
  std::string csv;
  bool timings = false;

  int samples = 50;
  int n_max = 8;
  double abs_tol = 1e-9;
  double r_max = 16.0;
  std::optional<int> grouplike_degree;

  double zeta = 0.4;
  double zeta1 = 0.3;
  double zeta2 = 0.3;
  double delta = 0.5;
  std::vector<double> q_scan;

  DeformationParams params() const { return DeformationParams(q, alpha, beta, guard); }
  DeformationParams params_at(double q_value) const {
    return DeformationParams(q_value, alpha, beta, guard);
  }

  /// Throws ConfigError on any value outside its domain.
  void validate() const;
};

/// Parses flat `key = value` text; `#` starts a comment. Throws ConfigError
/// on malformed lines.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Applies one key to the config; throws ConfigError on unknown keys or
/// values that do not parse.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a config file and applies every key in it.
void load_config_file(RunConfig& config, const std::string& path);

}  // namespace gboson::cli
