#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gboson {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Deformation triple (q, alpha, beta) of the generalized boson algebra.
///
/// Within `classical_guard` of q = 1 every formula is evaluated at
/// q = 1 +/- classical_guard instead, so the classical limit shares the
/// generic code path.
class DeformationParams {
 public:
  static constexpr double kDefaultGuard = 1e-6;

  DeformationParams(double q, double alpha, double beta,
                    double classical_guard = kDefaultGuard);

  double q() const { return q_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double classical_guard() const { return guard_; }

  /// q after the guard substitution.
  double effective_q() const { return q_eff_; }
  double log_q() const { return log_q_; }
  bool guarded() const { return q_eff_ != q_; }

  double ratio() const { return beta_ / alpha_; }

  /// q^{alpha/2} + q^{-alpha/2}
  double half_alpha_sum() const;
  /// pi / (q^{alpha/2} + q^{-alpha/2})
  double varpi() const;
  /// [[X]] = (q^X + q^{-X}) / (q^{alpha/2} + q^{-alpha/2})
  double double_bracket(double x) const;
  /// q - q^{-1}
  double q_minus_inverse() const;

  /// Parameters (q, -alpha, beta - alpha) used for negative box numbers.
  DeformationParams reflected() const;

  std::string describe() const;

 private:
  double q_;
  double alpha_;
  double beta_;
  double guard_;
  double q_eff_;
  double log_q_;
};

/// Budget for scalar power series.
struct ScalarSeriesBudget {
  int max_terms = 200;
  double tail_tolerance = 1e-14;
};

/// Thrown when a series does not reach its tail tolerance within budget.
class SeriesNotConverged : public std::runtime_error {
 public:
  SeriesNotConverged(const std::string& what, Complex partial_sum,
                     double last_term)
      : std::runtime_error(what),
        partial_sum_(partial_sum),
        last_term_(last_term) {}

  Complex partial_sum() const { return partial_sum_; }
  double last_term() const { return last_term_; }

 private:
  Complex partial_sum_;
  double last_term_;
};

}  // namespace gboson
