#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "gboson/params.hpp"

namespace gboson {

/// [X]_q = (q^X - q^{-X}) / (q - q^{-1}), evaluated as sinh(X ln q)/sinh(ln q).
double q_number(double x, const DeformationParams& params);
Complex q_number(Complex x, const DeformationParams& params);

/// {n}_b = (b^{n/2} - (-1)^n b^{-n/2}) / (b^{1/2} + b^{-1/2}).
double curly_number(int n, double base);
double curly_factorial(int n, double base);

/// (n)_{alpha,beta}; negative n uses (-n)_{alpha,beta} = (n)_{-alpha,beta-alpha}.
double box_number(int n, const DeformationParams& params);
double box_factorial(int n, const DeformationParams& params);

/// sigma_1 = 1, sigma_m = prod_{k<m} sum_{l<k} (-1)^l [(k-l) alpha]_q.
double sigma(int m, const DeformationParams& params);

/// floor bracket (1 - (-1)^n b^n) / (1 + b), its factorial and binomial.
double floor_bracket(int n, double base);
double floor_factorial(int n, double base);
/// Throws std::domain_error unless 0 <= k <= n.
double floor_binomial(int n, int k, double base);

/// (a; b)_n = prod_{l=1}^{n} (1 - a b^{l-1}).
Complex q_shifted_factorial(Complex a, double base, int n);

/// exp_{alpha,beta}(x) = sum_n x^n / (n)_{alpha,beta}!.
Complex deformed_exp(Complex x, const DeformationParams& params,
                     const ScalarSeriesBudget& budget = {});
/// Exp_b(x) = sum_n x^n / {n}_b!.
Complex cal_exp(Complex x, double base, const ScalarSeriesBudget& budget = {});

/// c_1..c_K with exp_{alpha,beta}(x) = exp(sum_k c_k x^k).
std::vector<double> ck_coefficients(int count, const DeformationParams& params);

/// (z)^{(+/-)}_{alpha,beta}; `sign` is +1 or -1.
Complex box_number_analytic(Complex z, int sign,
                            const DeformationParams& params);

/// Weight P = A / (A^2 + varpi^2 [beta - alpha/2]^2) with
/// A = alpha [[beta - alpha/2]] ln q / (q - q^{-1}).
double pole_weight(const DeformationParams& params);

/// ((eps)^{(+)}, (eps)^{(-)}); throws std::invalid_argument for eps = 0.
std::pair<Complex, Complex> epsilon_limit_check(double eps,
                                                const DeformationParams& params);

/// Residue of the symmetrized Gamma at -n, P / (n)_{-alpha,beta-alpha}!.
double gamma_residue(int n, const DeformationParams& params);

/// Precision-generic versions used by the high-precision measure code.
template <class Real>
Real q_number_generic(const Real& x, const Real& log_q) {
  using std::sinh;
  return sinh(x * log_q) / sinh(log_q);
}

template <class Real>
Real box_number_generic(int n, const Real& alpha, const Real& beta,
                        const Real& log_q) {
  using std::cosh;
  if (n < 0) return box_number_generic<Real>(-n, -alpha, beta - alpha, log_q);
  const Real half = alpha / 2;
  const Real lead = q_number_generic<Real>(Real(n) * alpha + beta - half, log_q);
  const Real tail = q_number_generic<Real>(beta - half, log_q);
  const Real sum = (n % 2 == 1) ? lead + tail : lead - tail;
  return sum / (2 * cosh(half * log_q));
}

}  // namespace gboson
