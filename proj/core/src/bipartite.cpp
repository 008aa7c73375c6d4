#include "gboson/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gboson/fockrep.hpp"
#include "gboson/qspecial.hpp"

namespace gboson {

namespace {

std::vector<double> positive_factorials(int count, const DeformationParams& params) {
  std::vector<double> out(static_cast<std::size_t>(count), 1.0);
  for (int n = 1; n < count; ++n) {
    const double box = box_number(n, params);
    if (!(box > 0.0)) {
      std::ostringstream os;
      os << "(" << n << ")_{alpha,beta} = " << box << " is not positive for " << params.describe();
      throw std::domain_error(os.str());
    }
    out[static_cast<std::size_t>(n)] = out[static_cast<std::size_t>(n - 1)] * box;
  }
  return out;
}

double q_power(double exponent, const DeformationParams& params) {
  return std::exp(exponent * params.log_q());
}

// zeta1^n / rho1^n = (zeta q^{-beta/2})^n, free of the 1/rho1 growth.
Complex ratio_power(int n, const BipartiteParams& bp, const DeformationParams& params) {
  return std::pow(bp.zeta * q_power(-0.5 * params.beta(), params), n);
}

Complex coefficient(int n, int m, const BipartiteParams& bp, const DeformationParams& params,
                    const std::vector<double>& factorials) {
  const double root = std::sqrt(factorials[static_cast<std::size_t>(n)] *
                                factorials[static_cast<std::size_t>(m)]);
  if (bp.boundary.empty()) {
    const Complex shifted =
        q_shifted_factorial(bp.delta * bp.rho2(params), -q_power(-params.alpha(), params), n);
    return q_power(-0.5 * n * m * params.alpha(), params) * std::pow(bp.delta, m) *
           ratio_power(n, bp, params) * std::pow(bp.zeta2, m) * shifted / root;
  }
  return g_general(n, m, bp, params) * std::pow(bp.zeta1, n) * std::pow(bp.zeta2, m) / root;
}

}  // namespace

void BipartiteParams::validate() const {
  if (zeta == 0.0) throw std::invalid_argument("bipartite eigenvalue zeta must be nonzero");
  if (zeta1 == 0.0) throw std::invalid_argument("bipartite parameter zeta1 must be nonzero");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
  for (double d : boundary) {
    if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("boundary values must lie in (0, 1]");
  }
}

Complex BipartiteParams::rho1(const DeformationParams& params) const {
  return zeta1 / zeta * q_power(0.5 * params.beta(), params);
}

Complex BipartiteParams::rho2(const DeformationParams& params) const {
  const Complex phase = std::polar(1.0, kPi * params.ratio());
  return phase * zeta2 / zeta * q_power(-0.5 * params.beta(), params);
}

double BipartiteParams::boundary_value(int m) const {
  if (boundary.empty()) return std::pow(delta, m);
  return boundary.at(static_cast<std::size_t>(m));
}

Complex g_general(int n, int m, const BipartiteParams& bp, const DeformationParams& params) {
  const double base = q_power(-params.alpha(), params);
  const Complex rho2 = bp.rho2(params);
  Complex sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = ((k * (k + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * floor_binomial(n, k, base) * std::pow(rho2, k) *
           q_power(-0.5 * k * (k - 1) * params.alpha(), params) * bp.boundary_value(m + k);
  }
  return q_power(-0.5 * n * m * params.alpha(), params) * sum / std::pow(bp.rho1(params), n);
}

Complex g_geometric(int n, int m, const BipartiteParams& bp, const DeformationParams& params) {
  const Complex shifted =
      q_shifted_factorial(bp.delta * bp.rho2(params), -q_power(-params.alpha(), params), n);
  return q_power(-0.5 * n * m * params.alpha(), params) * std::pow(bp.delta, m) * shifted /
         std::pow(bp.rho1(params), n);
}

Eigen::MatrixXcd g_matrix(const BipartiteParams& bp, const DeformationParams& params, int dim) {
  Eigen::MatrixXcd g(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      g(n, m) = bp.boundary.empty() ? g_geometric(n, m, bp, params) : g_general(n, m, bp, params);
    }
  }
  return g;
}

double g_recurrence_residual(const Eigen::MatrixXcd& g, const BipartiteParams& bp,
                             const DeformationParams& params) {
  const Complex rho1 = bp.rho1(params);
  const Complex rho2 = bp.rho2(params);
  const double alpha = params.alpha();
  double worst = 0.0;
  for (Eigen::Index n = 0; n + 1 < g.rows(); ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (Eigen::Index m = 0; m + 1 < g.cols(); ++m) {
      const Complex lhs = rho1 * q_power(0.5 * m * alpha, params) * g(n + 1, m) +
                          sign * rho2 * q_power(-0.5 * n * alpha, params) * g(n, m + 1);
      worst = std::max(worst, std::abs(lhs - g(n, m)));
    }
  }
  return worst;
}

double c_recurrence_residual(const Eigen::MatrixXcd& c, const BipartiteParams& bp,
                             const DeformationParams& params) {
  const double alpha = params.alpha();
  const double beta = params.beta();
  double worst = 0.0;
  for (Eigen::Index n = 0; n + 1 < c.rows(); ++n) {
    const Complex phase = std::polar(1.0, kPi * (n + params.ratio()));
    const double up_n = std::sqrt(box_number(static_cast<int>(n + 1), params));
    for (Eigen::Index m = 0; m + 1 < c.cols(); ++m) {
      const double up_m = std::sqrt(box_number(static_cast<int>(m + 1), params));
      const Complex lhs = c(n + 1, m) * up_n * q_power(0.5 * (m * alpha + beta), params) +
                          c(n, m + 1) * phase * up_m * q_power(-0.5 * (n * alpha + beta), params);
      worst = std::max(worst, std::abs(lhs - bp.zeta * c(n, m)));
    }
  }
  return worst;
}

BipartiteState assemble_state(const BipartiteParams& bp, const DeformationParams& params, int dim,
                              bool normalize) {
  bp.validate();
  if (dim < 1) throw std::invalid_argument("bipartite dimension must be positive");
  const auto factorials = positive_factorials(dim, params);
  BipartiteState state;
  state.params = bp;
  state.coefficients.resize(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      const Complex c = coefficient(n, m, bp, params, factorials);
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        std::ostringstream os;
        os << "bipartite coefficient c(" << n << ", " << m << ") is not finite for "
           << params.describe();
        throw std::overflow_error(os.str());
      }
      state.coefficients(n, m) = c;
    }
  }
  if (normalize) {
    if (!bp.boundary.empty()) {
      throw std::invalid_argument("normalization needs the geometric boundary");
    }
    state.norm = norm_check(bp, params).single_sum;
    state.coefficients /= std::sqrt(state.norm);
    state.normalized = true;
  }
  return state;
}

EigenResidual eigen_residual(const BipartiteState& state, const DeformationParams& params) {
  const int dim = static_cast<int>(state.coefficients.rows());
  const FockSpace space(params, dim);
  const Eigen::MatrixXcd delta_a = space.tensor_coproduct_matrix(BosonAlgebra(params).a());
  Eigen::VectorXcd v(dim * dim);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) v(n * dim + m) = state.coefficients(n, m);
  }
  const Eigen::VectorXcd r = delta_a * v - state.params.zeta * v;
  EigenResidual out;
  out.full = r.norm();
  double interior = 0.0;
  for (int n = 0; n + 1 < dim; ++n) {
    for (int m = 0; m + 1 < dim; ++m) interior += std::norm(r(n * dim + m));
  }
  out.interior = std::sqrt(interior);
  return out;
}

double NormComparison::relative_gap() const {
  const double scale = std::max(std::abs(double_sum), std::abs(single_sum));
  return scale > 0.0 ? std::abs(double_sum - single_sum) / scale : 0.0;
}

NormComparison norm_check(const BipartiteParams& bp, const DeformationParams& params,
                          int max_terms) {
  bp.validate();
  if (!bp.boundary.empty()) throw std::invalid_argument("norm_check needs the geometric boundary");
  const auto factorials = positive_factorials(max_terms, params);
  constexpr double kSettle = 1e-18;

  NormComparison out;
  int quiet_rows = 0;
  int n = 0;
  for (; n < max_terms && quiet_rows < 2; ++n) {
    double row = 0.0;
    int quiet = 0;
    for (int m = 0; m < max_terms && quiet < 2; ++m) {
      const double term = std::norm(coefficient(n, m, bp, params, factorials));
      row += term;
      quiet = (term <= kSettle * (out.double_sum + row)) ? quiet + 1 : 0;
      if (m + 1 == max_terms && quiet < 2) {
        throw SeriesNotConverged("bipartite norm row did not settle", row, term);
      }
    }
    out.double_sum += row;
    quiet_rows = (row <= kSettle * out.double_sum) ? quiet_rows + 1 : 0;
  }
  if (quiet_rows < 2) throw SeriesNotConverged("bipartite norm double sum did not settle",
                                               out.double_sum, 0.0);
  out.terms = n;

  const Complex a = bp.delta * bp.rho2(params);
  const double base = -q_power(-params.alpha(), params);
  const double scale = std::norm(bp.zeta) * q_power(-params.beta(), params);
  const double inner = bp.delta * bp.delta * std::norm(bp.zeta2);
  int quiet = 0;
  int k = 0;
  for (; k < max_terms && quiet < 2; ++k) {
    const double shifted = std::norm(q_shifted_factorial(a, base, k));
    const double weight = deformed_exp(inner * q_power(-k * params.alpha(), params), params).real();
    const double term =
        std::pow(scale, k) / factorials[static_cast<std::size_t>(k)] * shifted * weight;
    out.single_sum += term;
    quiet = (term <= kSettle * out.single_sum) ? quiet + 1 : 0;
  }
  if (quiet < 2) throw SeriesNotConverged("bipartite norm single sum did not settle",
                                          out.single_sum, 0.0);
  return out;
}

double schmidt_entropy(const Eigen::MatrixXcd& coefficients) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficients);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double total = sigma.squaredNorm();
  if (total == 0.0) return 0.0;
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double p = sigma(i) * sigma(i) / total;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

}  // namespace gboson
