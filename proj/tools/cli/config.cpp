#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gboson::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw ConfigError("value for '" + key + "' is not a number: '" + value + "'");
  }
  return out;
}

long long parse_integer(const std::string& key, const std::string& value) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("value for '" + key + "' is not an integer: '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const long long v = parse_integer(key, value);
  if (v < -1000000 || v > 1000000) throw ConfigError("value for '" + key + "' is out of range");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw ConfigError("value for '" + key + "' is not a boolean: '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ConfigError("list for '" + key + "' is empty");
  return out;
}

void check_q(double q, const char* what) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw ConfigError(std::string(what) + " must be a positive finite number");
  }
  if (q == 1.0) {
    throw ConfigError(std::string(what) +
                      " = 1 exactly is not allowed; use a value inside the classical guard");
  }
}

}  // namespace

void RunConfig::validate() const {
  check_q(q, "q");
  for (double v : q_scan) check_q(v, "q_scan entry");
  if (alpha == 0.0 || !std::isfinite(alpha)) throw ConfigError("alpha must be finite and nonzero");
  if (!std::isfinite(beta)) throw ConfigError("beta must be finite");
  if (!(guard > 0.0 && guard < 1e-4)) throw ConfigError("guard must lie in (0, 1e-4)");
  if (dim && *dim < 1) throw ConfigError("dim must be positive");
  if (order && *order < 0) throw ConfigError("order must be nonnegative");
  if (tol && !(*tol > 0.0)) throw ConfigError("tol must be positive");
  if (samples < 1) throw ConfigError("samples must be positive");
  if (n_max < 0 || n_max > 40) throw ConfigError("n_max must lie in [0, 40]");
  if (!(abs_tol > 0.0)) throw ConfigError("abs_tol must be positive");
  if (!(r_max > 0.0)) throw ConfigError("r_max must be positive");
  if (grouplike_degree && *grouplike_degree < 0) {
    throw ConfigError("grouplike_degree must be nonnegative");
  }
  if (zeta == 0.0) throw ConfigError("zeta must be nonzero");
  if (zeta1 == 0.0) throw ConfigError("zeta1 must be nonzero");
  if (!(delta > 0.0 && delta <= 1.0)) throw ConfigError("delta must lie in (0, 1]");
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(number) + " has no key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "q") config.q = parse_double(key, value);
  else if (key == "alpha") config.alpha = parse_double(key, value);
  else if (key == "beta") config.beta = parse_double(key, value);
  else if (key == "guard") config.guard = parse_double(key, value);
  else if (key == "dim") config.dim = parse_int(key, value);
  else if (key == "order") config.order = parse_int(key, value);
  else if (key == "tol") config.tol = parse_double(key, value);
  else if (key == "seed") {
    const long long v = parse_integer(key, value);
    if (v < 0) throw ConfigError("seed must be nonnegative");
    config.seed = static_cast<std::uint64_t>(v);
  } else if (key == "out") config.out = value;
  else if (key == "csv") config.csv = value;
  else if (key == "timings") config.timings = parse_bool(key, value);
  else if (key == "samples") config.samples = parse_int(key, value);
  else if (key == "n_max") config.n_max = parse_int(key, value);
  else if (key == "abs_tol") config.abs_tol = parse_double(key, value);
  else if (key == "r_max") config.r_max = parse_double(key, value);
  else if (key == "grouplike_degree") config.grouplike_degree = parse_int(key, value);
  else if (key == "zeta") config.zeta = parse_double(key, value);
  else if (key == "zeta1") config.zeta1 = parse_double(key, value);
  else if (key == "zeta2") config.zeta2 = parse_double(key, value);
  else if (key == "delta") config.delta = parse_double(key, value);
  else if (key == "q_scan") config.q_scan = parse_list(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  for (const auto& [key, value] : parse_key_values(buffer.str())) {
    apply_setting(config, key, value);
  }
}

}  // namespace gboson::cli
