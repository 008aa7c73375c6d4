// One PASS/FAIL line per acceptance criterion; exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/run.hpp"
#include "gboson/bipartite.hpp"
#include "gboson/coherent.hpp"
#include "gboson/dualalg.hpp"
#include "gboson/duality.hpp"
#include "gboson/fockrep.hpp"
#include "gboson/qspecial.hpp"
#include "gboson/ualg.hpp"

using namespace gboson;

namespace {

using Clock = std::chrono::steady_clock;

const DeformationParams kDefault(1.3, 2.0, 1.0);
const DeformationParams kClassical(1.0 + 1e-7, 2.0, 1.0);

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!condition) {
      ok = false;
      detail += " [fail]";
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void require_checks(Outcome& o, const std::vector<CheckResult>& checks, double tol,
                    const std::string& label) {
  double worst = 0.0;
  std::string worst_name;
  for (const auto& c : checks) {
    if (std::isnan(worst)) break;
    if (std::isnan(c.residual) || c.residual > worst) {
      worst = c.residual;
      worst_name = c.name;
    }
  }
  o.require(worst <= tol, label + " max " + num(worst) + " (" + worst_name + ") < " + num(tol));
}

Outcome c1_relations() {
  Outcome o;
  const int d = 32;
  const FockSpace fock(kDefault, d);
  const Eigen::MatrixXcd a = fock.a().matrix, ad = fock.adag().matrix, n = fock.number().matrix;
  Eigen::MatrixXcd bracket = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) bracket(i, i) = q_number(kDefault.alpha() * i + kDefault.beta(), kDefault);
  const int interior = d - 1;
  const auto worst = [&](const Eigen::MatrixXcd& m) {
    return m.topLeftCorner(interior, interior).cwiseAbs().maxCoeff();
  };
  const double scale = bracket.cwiseAbs().maxCoeff();
  const double anti = worst(a * ad + ad * a - bracket) / scale;
  const double ladder = a.cwiseAbs().maxCoeff();
  const double up = worst(n * ad - ad * n - ad) / ladder;
  const double down = worst(n * a - a * n + a) / ladder;
  o.require(anti < 1e-12, "aa+ + a+a relative " + num(anti));
  o.require(up < 1e-12 && down < 1e-12, "ladder commutators relative " + num(std::max(up, down)));
  return o;
}

Outcome c2_structure() {
  Outcome o;
  const auto checks = cli::structure_checks(BosonAlgebra(kDefault), 3, 1e-12);
  require_checks(o, checks, 1e-12, std::to_string(checks.size()) + " displays");
  return o;
}

Outcome c3_duality() {
  Outcome o;
  const Duality d(kDefault);
  const CheckResult ortho = d.pairing_orthonormality(4);
  o.require(ortho.residual <= 1e-12, "orthonormality " + num(ortho.residual));
  require_checks(o, d.duality_axiom_check(50, 42, PairingWindow{}), 1e-9, "axioms on 50 samples");
  return o;
}

Outcome c4_dual_hopf() {
  Outcome o;
  const DualAlgebra f(kDefault);
  require_checks(o, f.homomorphism_check(6), 1e-10, "homomorphism(6)");
  require_checks(o, f.coassociativity_check(5), 1e-10, "coassociativity(5)");
  require_checks(o, f.antipode_axiom_check(4), 1e-10, "antipode(4)");
  require_checks(o, f.coproduct_forms_check(6), 1e-10, "forms(6)");
  return o;
}

Outcome c5_tmatrix() {
  Outcome o;
  const Duality d(kDefault);
  const double cmp = d.tmatrix_compare(4);
  o.require(cmp < 1e-10, "closed vs series " + num(cmp));
  const CheckResult g = d.grouplike_check(6, 6, 3);
  o.require(g.residual < 1e-6, "group-like " + num(g.residual));
  return o;
}

void moments_against(Outcome& o, const DeformationParams& p, bool classical, const std::string& label) {
  try {
    const RadialMeasure measure(p);
    double worst = 0.0, factorial = 1.0, exact = 1.0;
    for (int n = 0; n <= 8; ++n) {
      if (n > 0) {
        factorial *= box_number(n, p);
        exact *= n;
      }
      const double value = moment_integral(n, measure).value;
      worst = std::max(worst, std::abs(value / factorial - 1.0));
      if (classical) worst = std::max(worst, std::abs(value / exact - 1.0));
    }
    o.require(worst < 1e-5, label + " moments rel " + num(worst));
    if (classical) {
      double glauber = 0.0;
      for (double rho = 0.0; rho <= 3.0; rho += 0.25)
        glauber = std::max(glauber, std::abs(measure.density(rho) / 2.0 - 1.0));
      o.require(glauber < 1e-5, label + " Glauber density " + num(glauber));
    }
    const ResolutionResult r = resolution_check(8, p);
    o.require(r.residual < 1e-5, label + " resolution " + num(r.residual));
  } catch (const MeasureDivergence& e) {
    o.require(false, label + " measure diverged at rho " + num(e.rho()) +
                         (e.precision_loss() ? " (precision loss)" : " (no decay)"));
  }
}

Outcome c6_completeness() {
  Outcome o;
  moments_against(o, DeformationParams(1.2, 2.0, 1.0), false, "q=1.2");
  moments_against(o, kClassical, true, "classical");
  return o;
}

Outcome c7_positivity() {
  Outcome o;
  for (double q : {1.2, 1.3}) {
    const auto scan = cli::deformed_exp_positivity(DeformationParams(q, 2.0, 1.0), -10.0, 10.0, 0.1);
    std::string what = "q=" + num(q) + " min " + num(scan.min_value) + " at " + num(scan.argmin);
    if (scan.first_nonpositive) what += ", first nonpositive x=" + num(*scan.first_nonpositive);
    o.require(scan.min_value > 0.0, what);
  }
  const CheckResult ck = cli::ck_closed_form_check(kDefault, 1e-12);
  o.require(ck.passed(), "c1..c3 " + num(ck.residual));
  return o;
}

Outcome c8_bipartite() {
  Outcome o;
  const BipartiteParams bp;
  const double rec = g_recurrence_residual(g_matrix(bp, kDefault, 16), bp, kDefault);
  o.require(rec < 1e-12, "g recurrence " + num(rec));
  const BipartiteState s = assemble_state(bp, kDefault, 14, true);
  const double eig = eigen_residual(s, kDefault).interior;
  o.require(eig < 1e-8, "eigen " + num(eig));
  const double gap = norm_check(bp, kDefault).relative_gap();
  o.require(gap < 1e-8, "norm gap " + num(gap));
  std::vector<double> entropies;
  for (double q : {1.5, 1.3, 1.1, 1.01, 1.001, 1.0 + 1e-7})
    entropies.push_back(schmidt_entropy(assemble_state(bp, DeformationParams(q, 2.0, 1.0), 14, true).coefficients));
  o.require(entropies.front() > 1e-2, "S(q=1.5) " + num(entropies.front()) + " > 0.01");
  o.require(entropies.back() < 1e-4, "S(classical) " + num(entropies.back()));
  bool monotone = true;
  for (std::size_t i = 1; i < entropies.size(); ++i) monotone = monotone && entropies[i] < entropies[i - 1];
  o.require(monotone, "monotone over scan");
  return o;
}

std::string run_command(std::vector<std::string> args) {
  args.insert(args.begin(), "gboson");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome c9_determinism(Clock::time_point start) {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"hopf-verify"}, {"structure"}, {"dual-basis"}, {"tmatrix"},
      {"coherent"},    {"bipartite", "--q-scan", "1.5,1.3,1.1,1.01,1.001,1.0000001"}};
  int identical = 0;
  for (const auto& c : commands) identical += run_command(c) == run_command(c) ? 1 : 0;
  o.require(identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) + " subcommands byte-identical");
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(total < 600.0, "acceptance wall " + num(total) + " s < 600 s");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double limit;
    std::function<Outcome()> body;
  };
  const auto start = Clock::now();
  const std::vector<Criterion> criteria = {
      {"C1", "defining relations", 1.0, c1_relations},
      {"C2", "structure constants", 10.0, c2_structure},
      {"C3", "dual basis duality", 30.0, c3_duality},
      {"C4", "dual Hopf axioms", 60.0, c4_dual_hopf},
      {"C5", "universal T matrix", 60.0, c5_tmatrix},
      {"C6", "completeness", 60.0, c6_completeness},
      {"C7", "positivity", 0.0, c7_positivity},
      {"C8", "bipartite", 30.0, c8_bipartite},
      {"C9", "determinism and runtime", 600.0, [&] { return c9_determinism(start); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit > 0.0) o.require(secs < c.limit, "runtime " + num(secs) + " s < " + num(c.limit) + " s");
    if (!o.ok) ++failures;
    std::printf("%s %s %s: %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
