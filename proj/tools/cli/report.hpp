#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cli/config.hpp"
#include "gboson/ualg.hpp"

namespace gboson::cli {

enum class Status { Pass, Fail, Diverged };

const char* status_name(Status s);

struct ReportCheck {
  std::string name;
  Status status = Status::Pass;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;
  double wall_seconds = 0.0;
};

/// A measure or series failure reported separately from tolerance breaches.
struct Divergence {
  std::string check;
  std::string message;
  double rho = 0.0;
  double value = 0.0;
  bool precision_loss = false;
};

using SettingValue = std::variant<double, int, bool, std::string>;

class Report {
 public:
  Report(std::string command, const RunConfig& config);

  void setting(std::string name, SettingValue value);
  void add(const CheckResult& check, double wall_seconds = 0.0);
  void add(ReportCheck check);
  /// Check that was skipped because its order is zero; reported as passing.
  void add_vacuous(const std::string& name, const std::string& reason);
  void add_divergence(Divergence d, double tolerance, double wall_seconds = 0.0);
  void warn(std::string message);

  const std::vector<ReportCheck>& checks() const { return checks_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::vector<Divergence>& divergences() const { return divergences_; }
  bool passed() const;

  /// Wall times are written only when `timings` is set, so that repeated
  /// runs produce identical bytes.
  std::string to_json(bool timings) const;

 private:
  std::string command_;
  RunConfig config_;
  std::vector<std::pair<std::string, SettingValue>> settings_;
  std::vector<ReportCheck> checks_;
  std::vector<Divergence> divergences_;
  std::vector<std::string> warnings_;
};

/// RFC 4180 table with CRLF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

  static std::string cell(double v);
  static std::string cell(int v);
  static std::string quote(const std::string& s);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace gboson::cli
