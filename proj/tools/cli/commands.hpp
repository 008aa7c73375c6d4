#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "gboson/ualg.hpp"

namespace gboson::cli {

struct CommandOutput {
  Report report;
  std::optional<CsvTable> table;
};

/// Printed coproduct and product structure constants of the boson algebra,
/// compared entrywise over all PBW indices of total degree <= range + 1.
std::vector<CheckResult> structure_checks(const BosonAlgebra& algebra, int range, double tol);

/// Sign scan of exp_{alpha,beta} on a uniform grid.
struct PositivityScan {
  double min_value = 0.0;
  double argmin = 0.0;
  int points = 0;
  /// Nonpositive grid point closest to x = 0, if any.
  std::optional<double> first_nonpositive;
};
PositivityScan deformed_exp_positivity(const DeformationParams& params, double lo, double hi,
                                       double step);

/// max |c_k - printed closed form| for k = 1, 2, 3.
CheckResult ck_closed_form_check(const DeformationParams& params, double tol);

CommandOutput cmd_structure(const RunConfig& config);
CommandOutput cmd_hopf_verify(const RunConfig& config);
CommandOutput cmd_dual_basis(const RunConfig& config);
CommandOutput cmd_tmatrix(const RunConfig& config);
CommandOutput cmd_coherent(const RunConfig& config);
CommandOutput cmd_bipartite(const RunConfig& config);

}  // namespace gboson::cli
