#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cli/json_writer.hpp"

namespace gboson::cli {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Diverged: return "diverged";
  }
  return "fail";
}

Report::Report(std::string command, const RunConfig& config)
    : command_(std::move(command)), config_(config) {}

void Report::setting(std::string name, SettingValue value) {
  settings_.emplace_back(std::move(name), std::move(value));
}

void Report::add(const CheckResult& check, double wall_seconds) {
  ReportCheck r;
  r.name = check.name;
  r.residual = check.residual;
  r.tolerance = check.tolerance;
  r.note = check.note;
  r.status = check.passed() ? Status::Pass : Status::Fail;
  r.wall_seconds = wall_seconds;
  add(std::move(r));
}

void Report::add(ReportCheck check) {
  // NaN residuals never pass.
  if (check.status == Status::Pass && !(check.residual <= check.tolerance)) {
    check.status = Status::Fail;
  }
  checks_.push_back(std::move(check));
}

void Report::add_vacuous(const std::string& name, const std::string& reason) {
  ReportCheck r;
  r.name = name;
  r.note = reason;
  checks_.push_back(std::move(r));
}

void Report::add_divergence(Divergence d, double tolerance, double wall_seconds) {
  ReportCheck r;
  r.name = d.check;
  r.tolerance = tolerance;
  r.status = Status::Diverged;
  r.residual = std::nan("");
  r.note = d.message;
  r.wall_seconds = wall_seconds;
  checks_.push_back(std::move(r));
  divergences_.push_back(std::move(d));
}

void Report::warn(std::string message) { warnings_.push_back(std::move(message)); }

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const ReportCheck& c) { return c.status == Status::Pass; });
}

std::string Report::to_json(bool timings) const {
  const DeformationParams params = config_.params();
  JsonWriter w;
  w.begin_object();
  w.field("command", command_);
  w.key("params").begin_object();
  w.field("q", params.q());
  w.field("alpha", params.alpha());
  w.field("beta", params.beta());
  w.field("effective_q", params.effective_q());
  w.field("classical_guard", params.classical_guard());
  w.end_object();
  w.field("seed", config_.seed);
  w.key("settings").begin_object();
  for (const auto& [name, value] : settings_) {
    w.key(name);
    std::visit([&](const auto& v) { w.value(v); }, value);
  }
  w.end_object();
  w.key("checks").begin_array();
  for (const auto& c : checks_) {
    w.begin_object();
    w.field("name", c.name);
    w.field("status", status_name(c.status));
    w.field("residual", c.residual);
    w.field("tolerance", c.tolerance);
    w.field("note", c.note);
    if (timings) w.field("wall_seconds", c.wall_seconds);
    w.end_object();
  }
  w.end_array();
  w.key("divergences").begin_array();
  for (const auto& d : divergences_) {
    w.begin_object();
    w.field("check", d.check);
    w.field("message", d.message);
    w.field("rho", d.rho);
    w.field("value", d.value);
    w.field("precision_loss", d.precision_loss);
    w.end_object();
  }
  w.end_array();
  w.key("warnings").begin_array();
  for (const auto& m : warnings_) w.value(m);
  w.end_array();
  w.field("passed", passed());
  w.end_object();
  return w.str();
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::invalid_argument("CSV row width mismatch");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::cell(double v) {
  const std::string s = JsonWriter::format_double(v);
  return s == "null" ? std::string() : s;
}

std::string CsvTable::cell(int v) { return std::to_string(v); }

std::string CsvTable::quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string CsvTable::str() const {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += quote(cells[i]);
    }
    out += "\r\n";
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

}  // namespace gboson::cli
