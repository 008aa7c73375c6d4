#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "gboson/bipartite.hpp"
#include "gboson/coherent.hpp"
#include "gboson/dualalg.hpp"
#include "gboson/duality.hpp"
#include "gboson/qspecial.hpp"

namespace gboson::cli {

namespace {

constexpr Complex kI{0.0, 1.0};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::vector<BasisIndex> indices_up_to(int total) {
  std::vector<BasisIndex> out;
  for (int k = 0; k <= total; ++k)
    for (int l = 0; k + l <= total; ++l)
      for (int m = 0; k + l + m <= total; ++m) out.push_back({k, l, m});
  return out;
}

double tolerance_or(const RunConfig& config, double fallback) {
  return config.tol.value_or(fallback);
}

CheckResult with_tolerance(CheckResult r, const RunConfig& config) {
  if (config.tol) r.tolerance = *config.tol;
  return r;
}

void add_all(Report& report, const std::vector<CheckResult>& checks, double seconds,
             const RunConfig& config) {
  for (const auto& c : checks) report.add(with_tolerance(c, config), seconds);
}

template <class F>
void timed_checks(Report& report, const RunConfig& config, F&& produce) {
  const Stopwatch sw;
  const std::vector<CheckResult> checks = produce();
  add_all(report, checks, sw.seconds() / std::max<std::size_t>(1, checks.size()), config);
}

void common_settings(Report& report, const RunConfig& config) {
  report.setting("order", config.order.value_or(-1));
  report.setting("dim", config.dim.value_or(-1));
}

}  // namespace

std::vector<CheckResult> structure_checks(const BosonAlgebra& algebra, int range, double tol) {
  const DeformationParams& p = algebra.params();
  const double half_log = 0.5 * p.alpha() * p.log_q();
  const double base = std::exp(p.alpha() * p.log_q());
  const int window = range + 1;
  const auto targets = indices_up_to(window);

  std::map<BasisIndex, StructureTable> g_tables;
  for (const auto& t : targets) g_tables.emplace(t, algebra.extract_g(t, window));

  using Expected = std::function<Complex(const BasisIndex&)>;
  const auto g_residual = [&](const BasisIndex& i, const BasisIndex& j, const Expected& expected) {
    double worst = 0.0;
    for (const auto& t : targets) {
      const Complex got = g_tables.at(t).at({i.k, i.l, i.m, j.k, j.l, j.m});
      worst = std::max(worst, std::abs(got - expected(t)));
    }
    return worst;
  };
  const auto is = [](const BasisIndex& t, int k, int l, int m) {
    return t.k == k && t.l == l && t.m == m ? 1.0 : 0.0;
  };

  std::vector<CheckResult> out;

  double six = 0.0;
  six = std::max(six, g_residual({1, 0, 0}, {0, 0, 1},
                                 [&](const BasisIndex& t) { return Complex(is(t, 1, 0, 1)); }));
  six = std::max(six, g_residual({0, 0, 1}, {1, 0, 0},
                                 [&](const BasisIndex& t) { return Complex(is(t, 1, 0, 1)); }));
  six = std::max(six, g_residual({0, 1, 0}, {1, 0, 0}, [&](const BasisIndex& t) {
    return is(t, 1, 1, 0) - (half_log + kI * kPi) * is(t, 1, 0, 0);
  }));
  six = std::max(six, g_residual({1, 0, 0}, {0, 1, 0}, [&](const BasisIndex& t) {
    return Complex(is(t, 1, 1, 0) + half_log * is(t, 1, 0, 0));
  }));
  six = std::max(six, g_residual({0, 1, 0}, {0, 0, 1}, [&](const BasisIndex& t) {
    return is(t, 0, 1, 1) - (half_log - kI * kPi) * is(t, 0, 0, 1);
  }));
  six = std::max(six, g_residual({0, 0, 1}, {0, 1, 0}, [&](const BasisIndex& t) {
    return Complex(is(t, 0, 1, 1) + half_log * is(t, 0, 0, 1));
  }));
  const std::string note = "sources <= " + std::to_string(range) + ", targets <= " +
                           std::to_string(window);
  out.push_back({"g six-entry display", six, tol, "targets <= " + std::to_string(window)});
  double curly = 0.0;
  for (int p0 = 0; p0 <= range; ++p0) {
    curly = std::max(curly, g_residual({1, 0, 0}, {p0, 0, 0}, [&](const BasisIndex& t) {
      return Complex(t.k == p0 + 1 && t.l == 0 && t.m == 0 ? curly_number(t.k, base) : 0.0);
    }));
  }
  out.push_back({"g^{100,p00} = {k}_{q^alpha}", curly, tol, note});

  double shift = 0.0;
  for (int p0 = 0; p0 <= range; ++p0)
    for (int r = 0; p0 + r <= range; ++r) {
      shift = std::max(shift, g_residual({p0, r, 0}, {0, 1, 0}, [&](const BasisIndex& t) {
        if (t.k != p0 || t.m != 0) return Complex(0.0);
        if (t.l == r + 1) return Complex(r + 1.0);
        if (t.l == r) return Complex(p0 * half_log);
        return Complex(0.0);
      }));
    }
  out.push_back({"g^{pr0,010} (r+1) family", shift, tol, note});

  double lowering = 0.0;
  const Complex step = -half_log + kI * kPi;
  for (int p0 = 0; p0 <= range; ++p0)
    for (int r = 0; p0 + r <= range; ++r)
      for (int s = 0; p0 + r + s <= range; ++s) {
        lowering = std::max(lowering, g_residual({p0, r, s}, {0, 0, 1}, [&](const BasisIndex& t) {
          if (t.k != p0 || t.m != s + 1 || t.l > r) return Complex(0.0);
          const int j = r - t.l;
          return curly_number(t.m, base) * std::pow(step, j) / std::tgamma(j + 1.0);
        }));
      }
  out.push_back({"g^{prs,001} family", lowering, tol, note});

  // f^{100}, f^{010}, f^{001} over all index pairs.
  const auto sources = indices_up_to(range);
  const auto partners = indices_up_to(window);
  const double weight = 2.0 * p.alpha() * p.log_q() / p.q_minus_inverse();
  double f100 = 0.0, f010 = 0.0, f001 = 0.0;
  for (const auto& i : sources)
    for (const auto& j : partners) {
      const StructureTable f = algebra.extract_f(i, j, 2);
      Complex e100 = is(i, 1, 0, 0) * is(j, 0, 0, 0);
      if (i.k == 0 && j.k == i.m + 1 && j.l == 0 && j.m == 0) e100 += sigma(i.m + 1, p);
      Complex e010 = 0.0;
      if (i.k == 0 && i.m == 0 && j.k == 0 && j.m == 0 && i.l + j.l == 1) e010 += 1.0;
      if (i.k == 0 && i.l == 0 && i.m >= 1 && j.k == i.m && j.l == 0 && j.m == 0)
        e010 += weight * sigma(i.m, p);
      Complex e001 = is(i, 0, 0, 0) * is(j, 0, 0, 1);
      if (i.k == 0 && i.l == 0 && i.m == j.k + 1 && j.m == 0) e001 += sigma(j.k + 1, p);
      f100 = std::max(f100, std::abs(f.at({1, 0, 0}) - e100));
      f010 = std::max(f010, std::abs(f.at({0, 1, 0}) - e010));
      f001 = std::max(f001, std::abs(f.at({0, 0, 1}) - e001));
    }
  const std::string fnote = "left factors <= " + std::to_string(range) + ", right factors <= " +
                            std::to_string(window);
  out.push_back({"f^{100} sigma display", f100, tol, fnote});
  out.push_back({"f^{010} sigma display", f010, tol, fnote});
  out.push_back({"f^{001} sigma display", f001, tol, fnote});
  return out;
}

PositivityScan deformed_exp_positivity(const DeformationParams& params, double lo, double hi,
                                       double step) {
  PositivityScan scan;
  scan.min_value = std::numeric_limits<double>::infinity();
  const int count = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= count; ++i) {
    const double x = lo + i * step;
    const double v = deformed_exp(x, params).real();
    ++scan.points;
    if (v < scan.min_value) {
      scan.min_value = v;
      scan.argmin = x;
    }
    if (!(v > 0.0) && (!scan.first_nonpositive || std::abs(x) < std::abs(*scan.first_nonpositive)))
      scan.first_nonpositive = x;
  }
  return scan;
}

CheckResult ck_closed_form_check(const DeformationParams& params, double tol) {
  const auto qn = [&](double x) { return q_number(x, params); };
  const auto bb = [&](double x) { return params.double_bracket(x); };
  const double a = params.alpha();
  const double b = params.beta();
  const std::vector<double> c = ck_coefficients(3, params);
  const double c1 = 1.0 / qn(b);
  const double c2 = 1.0 / (qn(a) * qn(b) * bb(b + a / 2)) - 1.0 / (2.0 * qn(b) * qn(b));
  const double c3 = 1.0 / (qn(a) * qn(b) * qn(a + b) * bb(1.5 * a) * bb(b + a / 2)) -
                    1.0 / (qn(a) * qn(b) * qn(b) * bb(b + a / 2)) +
                    1.0 / (3.0 * qn(b) * qn(b) * qn(b));
  const double worst =
      std::max({std::abs(c[0] - c1), std::abs(c[1] - c2), std::abs(c[2] - c3)});
  return {"c_1..c_3 recurrence vs closed forms", worst, tol, params.describe()};
}

CommandOutput cmd_structure(const RunConfig& config) {
  CommandOutput out{Report("structure", config), std::nullopt};
  const int range = config.order.value_or(3);
  common_settings(out.report, config);
  out.report.setting("range", range);
  const BosonAlgebra algebra(config.params());
  timed_checks(out.report, config,
               [&] { return structure_checks(algebra, range, tolerance_or(config, 1e-12)); });
  return out;
}

CommandOutput cmd_hopf_verify(const RunConfig& config) {
  CommandOutput out{Report("hopf-verify", config), std::nullopt};
  Report& report = out.report;
  const int order = config.order.value_or(4);
  common_settings(report, config);
  report.setting("series_order", order);
  report.setting("samples", config.samples);

  const std::vector<std::string> names = {
      "structure constants",      "U Hopf axioms",        "dual homomorphism",
      "dual coassociativity",     "dual antipode axiom",  "dual antipode antihomomorphism",
      "raw vs simplified coproducts", "pairing orthonormality", "duality axioms",
      "T matrix series vs closed form"};
  if (order == 0) {
    for (const auto& n : names) report.add_vacuous(n, "order-0: no terms to check");
    return out;
  }

  const Duality duality(config.params());
  const BosonAlgebra& u = duality.boson();
  const DualAlgebra& f = duality.dual();
  timed_checks(report, config,
               [&] { return structure_checks(u, std::min(order, 3), 1e-12); });
  timed_checks(report, config, [&] {
    return u.hopf_axioms({{"a", u.a()}, {"a^dagger", u.adag()}, {"Ntilde", u.ntilde()}});
  });
  timed_checks(report, config, [&] { return f.homomorphism_check(order); });
  timed_checks(report, config, [&] { return f.coassociativity_check(order); });
  timed_checks(report, config, [&] { return f.antipode_axiom_check(order); });
  timed_checks(report, config, [&] { return f.antihomomorphism_check(order); });
  timed_checks(report, config, [&] { return f.coproduct_forms_check(order); });
  timed_checks(report, config, [&] {
    return std::vector<CheckResult>{duality.pairing_orthonormality(std::min(order, 4))};
  });
  timed_checks(report, config, [&] {
    return duality.duality_axiom_check(config.samples, config.seed, PairingWindow{});
  });
  timed_checks(report, config, [&] {
    const int degree = std::min(order, 6);
    return std::vector<CheckResult>{{"T matrix series vs closed form",
                                     duality.tmatrix_compare(degree), 1e-10,
                                     "total degree <= " + std::to_string(degree)}};
  });
  return out;
}

CommandOutput cmd_dual_basis(const RunConfig& config) {
  CommandOutput out{Report("dual-basis", config), std::nullopt};
  Report& report = out.report;
  const int order = std::min(config.order.value_or(4), 8);
  common_settings(report, config);
  report.setting("max_index", order);
  report.setting("samples", config.samples);
  const Duality duality(config.params());
  const DualAlgebra& f = duality.dual();

  timed_checks(report, config, [&] {
    return std::vector<CheckResult>{duality.pairing_orthonormality(order)};
  });
  timed_checks(report, config, [&] {
    const int total = std::max(order, 6);
    double worst = 0.0;
    for (const auto& i : indices_up_to(total)) {
      for (const auto& [j, c] : f.basis_change(f.dual_basis_e(i), total)) {
        worst = std::max(worst, std::abs(c - Complex(j == i ? 1.0 : 0.0)));
      }
    }
    return std::vector<CheckResult>{{"basis_change(e^{klm}) round trip", worst, 1e-12,
                                     "k + l + m <= " + std::to_string(total)}};
  });
  timed_checks(report, config, [&] {
    return duality.duality_axiom_check(config.samples, config.seed, PairingWindow{});
  });
  return out;
}

CommandOutput cmd_tmatrix(const RunConfig& config) {
  CommandOutput out{Report("tmatrix", config), std::nullopt};
  Report& report = out.report;
  const int degree = config.order.value_or(4);
  const int dim = config.dim.value_or(6);
  const int group_degree = config.grouplike_degree.value_or(3);
  common_settings(report, config);
  report.setting("series_degree", degree);
  report.setting("grouplike_degree", group_degree);
  if (degree > 6) throw ConfigError("tmatrix order must be <= 6");
  if (dim < 2 || dim > 8) throw ConfigError("tmatrix dim must lie in [2, 8]");
  const Duality duality(config.params());

  timed_checks(report, config, [&] {
    return std::vector<CheckResult>{{"T matrix series vs closed form",
                                     duality.tmatrix_compare(degree), 1e-10,
                                     "total degree <= " + std::to_string(degree)}};
  });
  timed_checks(report, config, [&] {
    const Eigen::MatrixXcd t = duality.tmatrix_represented(dim, dim, group_degree);
    return std::vector<CheckResult>{{"represented T vacuum entry", std::abs(t(0, 0) - 1.0),
                                     1e-12, "D = " + std::to_string(dim)}};
  });
  timed_checks(report, config, [&] {
    CheckResult r = duality.grouplike_check(dim, dim, group_degree);
    r.tolerance = 1e-6;
    return std::vector<CheckResult>{r};
  });
  return out;
}

CommandOutput cmd_coherent(const RunConfig& config) {
  CommandOutput out{Report("coherent", config),
                    CsvTable({"n", "I_n", "box_factorial", "ratio"})};
  Report& report = out.report;
  const DeformationParams params = config.params();
  const int dim = config.dim.value_or(8);
  const double tol = tolerance_or(config, 1e-5);
  common_settings(report, config);
  report.setting("n_max", config.n_max);
  report.setting("abs_tol", config.abs_tol);
  report.setting("r_max", config.r_max);
  if (dim < 3) throw ConfigError("coherent dim must be at least 3");

  QuadratureConfig quad;
  quad.abs_tolerance = config.abs_tol;
  quad.r_max = config.r_max;

  {
    const Stopwatch sw;
    const PositivityScan scan = deformed_exp_positivity(params, -10.0, 10.0, 0.1);
    ReportCheck c;
    c.name = "exp_{alpha,beta}(x) > 0 on [-10, 10]";
    c.residual = scan.first_nonpositive ? std::max(0.0, -scan.min_value) : 0.0;
    c.status = scan.first_nonpositive ? Status::Fail : Status::Pass;
    c.note = "min " + format_number(scan.min_value) + " at x = " + format_number(scan.argmin) +
             (scan.first_nonpositive
                  ? ", first nonpositive at x = " + format_number(*scan.first_nonpositive)
                  : std::string());
    c.wall_seconds = sw.seconds();
    report.add(std::move(c));
  }
  timed_checks(report, config, [&] {
    return std::vector<CheckResult>{ck_closed_form_check(params, 1e-12)};
  });

  std::optional<RadialMeasure> measure;
  try {
    measure.emplace(params);
  } catch (const std::domain_error& e) {
    report.add_divergence({"radial measure", e.what(), 0.0, 0.0, false}, tol);
    return out;
  }

  for (int n = 0; n <= config.n_max; ++n) {
    const Stopwatch sw;
    const std::string name = "moment I_" + std::to_string(n) + " / (n)!";
    const double factorial = box_factorial(n, params);
    try {
      const MomentResult m = moment_integral(n, *measure, quad);
      const double ratio = m.value / factorial;
      report.add({name, Status::Pass, std::abs(ratio - 1.0), tol,
                  "quadrature on [0, " + format_number(m.upper_limit) + "]", sw.seconds()});
      out.table->add_row({CsvTable::cell(n), CsvTable::cell(m.value), CsvTable::cell(factorial),
                          CsvTable::cell(ratio)});
    } catch (const MeasureDivergence& e) {
      report.add_divergence({name, e.what(), e.rho(), e.value(), e.precision_loss()}, tol,
                            sw.seconds());
      out.table->add_row({CsvTable::cell(n), "", CsvTable::cell(factorial), ""});
    }
  }

  const Stopwatch sw;
  try {
    const ResolutionResult r = resolution_check(dim, params, quad);
    report.add({"resolution of unity", Status::Pass, r.residual, tol,
                "first " + std::to_string(dim - 2) + " of D = " + std::to_string(dim) +
                    " states",
                sw.seconds()});
  } catch (const MeasureDivergence& e) {
    report.add_divergence({"resolution of unity", e.what(), e.rho(), e.value(),
                           e.precision_loss()},
                          tol, sw.seconds());
  }
  return out;
}

CommandOutput cmd_bipartite(const RunConfig& config) {
  CommandOutput out{Report("bipartite", config),
                    CsvTable({"q", "schmidt_entropy", "norm", "eigen_residual"})};
  Report& report = out.report;
  const int dim = config.dim.value_or(14);
  const std::vector<double> qs = config.q_scan.empty() ? std::vector<double>{config.q}
                                                       : config.q_scan;
  common_settings(report, config);
  report.setting("zeta", config.zeta);
  report.setting("zeta1", config.zeta1);
  report.setting("zeta2", config.zeta2);
  report.setting("delta", config.delta);

  double widen = 1.0;
  if (dim < 4) {
    widen = 1e6;
    report.warn("D = " + std::to_string(dim) +
                " leaves almost no interior components; tolerances widened by 1e6");
  }
  const double rec_tol = tolerance_or(config, 1e-12) * widen;
  const double eig_tol = tolerance_or(config, 1e-8) * widen;
  const double norm_tol = tolerance_or(config, 1e-8) * widen;

  BipartiteParams bp;
  bp.zeta = config.zeta;
  bp.zeta1 = config.zeta1;
  bp.zeta2 = config.zeta2;
  bp.delta = config.delta;

  std::vector<std::pair<double, double>> entropies;
  for (double q : qs) {
    const DeformationParams params = config.params_at(q);
    const std::string tag = " at q = " + format_number(q);
    const Stopwatch sw;
    try {
      const Eigen::MatrixXcd g = g_matrix(bp, params, dim + 2);
      report.add({"g recurrence" + tag, Status::Pass, g_recurrence_residual(g, bp, params),
                  rec_tol, "D = " + std::to_string(dim + 2), sw.seconds()});
      const BipartiteState raw = assemble_state(bp, params, dim);
      report.add({"c recurrence" + tag, Status::Pass,
                  c_recurrence_residual(raw.coefficients, bp, params), rec_tol,
                  "D = " + std::to_string(dim), 0.0});
      const EigenResidual er = eigen_residual(raw, params);
      report.add({"Delta(a) eigenvector" + tag, Status::Pass, er.interior, eig_tol,
                  "interior components; full residual " + format_number(er.full), 0.0});
      const NormComparison nc = norm_check(bp, params);
      report.add({"norm double vs single sum" + tag, Status::Pass, nc.relative_gap(), norm_tol,
                  std::to_string(nc.terms) + " rows", 0.0});
      const BipartiteState normalized = assemble_state(bp, params, dim, true);
      const double entropy = schmidt_entropy(normalized.coefficients);
      entropies.emplace_back(q, entropy);
      out.table->add_row({CsvTable::cell(q), CsvTable::cell(entropy),
                          CsvTable::cell(nc.single_sum), CsvTable::cell(er.interior)});
    } catch (const SeriesNotConverged& e) {
      report.add_divergence(
          {"bipartite norm" + tag, e.what(), 0.0, e.partial_sum().real(), false}, norm_tol);
    } catch (const std::domain_error& e) {
      report.add({"bipartite state" + tag, Status::Fail, std::nan(""), 0.0, e.what(), 0.0});
    } catch (const std::overflow_error& e) {
      report.add({"bipartite state" + tag, Status::Fail, std::nan(""), 0.0, e.what(), 0.0});
    }
  }

  if (entropies.size() > 1) {
    std::sort(entropies.begin(), entropies.end());
    double worst = 0.0;
    for (std::size_t i = 1; i < entropies.size(); ++i)
      worst = std::max(worst, entropies[i - 1].second - entropies[i].second);
    report.add({"entropy increases with q", Status::Pass, worst, 0.0,
                std::to_string(entropies.size()) + " scan points", 0.0});
  }
  return out;
}

}  // namespace gboson::cli
