#include "gboson/qspecial.hpp"

#include <sstream>
#include <stdexcept>

namespace gboson {

namespace {

// Shared summation loop: terms are produced by ratio from the previous one.
template <class RatioFn>
Complex sum_series(Complex x, const ScalarSeriesBudget& budget, RatioFn ratio,
                   const char* name) {
  Complex sum = 1.0;
  Complex term = 1.0;
  int small_run = 0;
  for (int n = 1; n < budget.max_terms; ++n) {
    term *= x / ratio(n);
    sum += term;
    small_run = std::abs(term) < budget.tail_tolerance ? small_run + 1 : 0;
    if (small_run >= 2) return sum;
  }
  std::ostringstream os;
  os << name << " did not converge within " << budget.max_terms
     << " terms (last term " << std::abs(term) << ")";
  throw SeriesNotConverged(os.str(), sum, std::abs(term));
}

}  // namespace

double q_number(double x, const DeformationParams& params) {
  return q_number_generic<double>(x, params.log_q());
}

Complex q_number(Complex x, const DeformationParams& params) {
  return std::sinh(x * params.log_q()) / std::sinh(params.log_q());
}

double curly_number(int n, double base) {
  const double l = std::log(base);
  if (n % 2 == 0) return std::sinh(0.5 * n * l) / std::cosh(0.5 * l);
  return std::cosh(0.5 * n * l) / std::cosh(0.5 * l);
}

double curly_factorial(int n, double base) {
  double out = 1.0;
  for (int j = 1; j <= n; ++j) out *= curly_number(j, base);
  return out;
}

double box_number(int n, const DeformationParams& params) {
  if (n < 0) return box_number(-n, params.reflected());
  return box_number_generic<double>(n, params.alpha(), params.beta(),
                                    params.log_q());
}

double box_factorial(int n, const DeformationParams& params) {
  double out = 1.0;
  for (int j = 1; j <= n; ++j) out *= box_number(j, params);
  return out;
}

double sigma(int m, const DeformationParams& params) {
  if (m < 1) throw std::domain_error("sigma requires m >= 1");
  double out = 1.0;
  for (int k = 1; k < m; ++k) {
    double factor = 0.0;
    for (int l = 0; l < k; ++l) {
      const double sign = (l % 2 == 0) ? 1.0 : -1.0;
      factor += sign * q_number((k - l) * params.alpha(), params);
    }
    out *= factor;
  }
  return out;
}

double floor_bracket(int n, double base) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return (1.0 - sign * std::pow(base, n)) / (1.0 + base);
}

double floor_factorial(int n, double base) {
  double out = 1.0;
  for (int j = 1; j <= n; ++j) out *= floor_bracket(j, base);
  return out;
}

double floor_binomial(int n, int k, double base) {
  if (k < 0 || k > n) throw std::domain_error("floor_binomial requires 0 <= k <= n");
  // Multiplicative form avoids dividing by vanishing factorials.
  double out = 1.0;
  for (int j = 1; j <= k; ++j)
    out *= floor_bracket(n - k + j, base) / floor_bracket(j, base);
  return out;
}

Complex q_shifted_factorial(Complex a, double base, int n) {
  Complex out = 1.0;
  double power = 1.0;
  for (int l = 1; l <= n; ++l) {
    out *= 1.0 - a * power;
    power *= base;
  }
  return out;
}

Complex deformed_exp(Complex x, const DeformationParams& params,
                     const ScalarSeriesBudget& budget) {
  return sum_series(
      x, budget,
      [&](int n) {
        const double b = box_number(n, params);
        if (b == 0.0) throw std::domain_error("deformed_exp hits a vanishing box number");
        return b;
      },
      "deformed_exp");
}

Complex cal_exp(Complex x, double base, const ScalarSeriesBudget& budget) {
  return sum_series(
      x, budget, [&](int n) { return curly_number(n, base); }, "cal_exp");
}

std::vector<double> ck_coefficients(int count, const DeformationParams& params) {
  if (count < 1) throw std::domain_error("ck_coefficients requires K >= 1");
  std::vector<double> inv_fact(count + 1);
  for (int k = 0; k <= count; ++k) inv_fact[k] = 1.0 / box_factorial(k, params);
  std::vector<double> c(count + 1, 0.0);
  for (int k = 1; k <= count; ++k) {
    double acc = 0.0;
    for (int l = 1; l < k; ++l) acc += l * c[l] * inv_fact[k - l];
    c[k] = inv_fact[k] - acc / k;
  }
  return {c.begin() + 1, c.end()};
}

Complex box_number_analytic(Complex z, int sign,
                            const DeformationParams& params) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("box_number_analytic sign must be +1 or -1");
  const double half = 0.5 * params.alpha();
  const Complex lead = q_number(z * params.alpha() + params.beta() - half, params);
  const double tail = q_number(params.beta() - half, params);
  const Complex phase = std::exp(Complex(0.0, sign * kPi) * z);
  return (lead - phase * tail) / params.half_alpha_sum();
}

double pole_weight(const DeformationParams& params) {
  const double shift = params.beta() - 0.5 * params.alpha();
  const double a = params.alpha() * params.double_bracket(shift) *
                   params.log_q() / params.q_minus_inverse();
  const double b = params.varpi() * q_number(shift, params);
  return a / (a * a + b * b);
}

std::pair<Complex, Complex> epsilon_limit_check(double eps,
                                                const DeformationParams& params) {
  if (eps == 0.0) throw std::invalid_argument("epsilon_limit_check requires eps != 0");
  return {box_number_analytic(eps, 1, params), box_number_analytic(eps, -1, params)};
}

double gamma_residue(int n, const DeformationParams& params) {
  // Gamma(-n + eps) = Gamma(1 + eps) / prod_{j=0}^{n} (-j + eps); the j = 0
  // factor carries the symmetrized weight, the others tend to (-j)_{alpha,beta}.
  double out = pole_weight(params);
  for (int j = 1; j <= n; ++j) out /= box_number(-j, params);
  return out;
}

}  // namespace gboson
