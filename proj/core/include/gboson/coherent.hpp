#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gboson/params.hpp"

namespace gboson {

/// Truncated normalized coherent state
///   |zeta> = exp_{alpha,beta}(|zeta|^2)^{-1/2} sum_n zeta^n / sqrt((n)!) |n>.
struct CoherentState {
  Complex zeta;
  int dim = 0;
  Eigen::VectorXcd coefficients;
  bool normalized = true;
  /// 1 - sum_{n<D} |c_n|^2
  double tail_mass = 0.0;
};

/// Throws SeriesNotConverged when the normalizer does not converge and
/// std::domain_error when some (n)_{alpha,beta} <= 0 for n < dim.
CoherentState build_coherent(Complex zeta, int dim, const DeformationParams& params,
                             const ScalarSeriesBudget& budget = {});

/// <z1|z2> of the truncated normalized states.
Complex overlap(Complex z1, Complex z2, int dim, const DeformationParams& params);

/// Raised when the radial integrand does not decay before the scan limit or
/// the measure series cannot be summed.
class MeasureDivergence : public std::runtime_error {
 public:
  MeasureDivergence(const std::string& what, double rho, double value, bool precision_loss)
      : std::runtime_error(what), rho_(rho), value_(value), precision_loss_(precision_loss) {}

  /// Radius where the failure was detected and the integrand there.
  double rho() const { return rho_; }
  double value() const { return value_; }
  /// The alternating measure series lost more digits than it carries.
  bool precision_loss() const { return precision_loss_; }

 private:
  double rho_;
  double value_;
  bool precision_loss_;
};

/// F(rho) = C exp_{-alpha,beta-alpha}(rho^2), C = 2 P, with the series summed
/// in 100-digit arithmetic. F and density throw MeasureDivergence when the
/// series does not settle or cancels beyond the working precision.
class RadialMeasure {
 public:
  static constexpr int kMaxTerms = 1000;

  explicit RadialMeasure(DeformationParams params);
  ~RadialMeasure();
  RadialMeasure(RadialMeasure&&) noexcept;
  RadialMeasure& operator=(RadialMeasure&&) noexcept;

  const DeformationParams& params() const { return params_; }
  double prefactor() const { return prefactor_; }
  double F(double rho) const;
  /// F(rho) exp_{alpha,beta}(rho^2)
  double density(double rho) const;

 private:
  struct Impl;
  DeformationParams params_;
  double prefactor_;
  std::unique_ptr<Impl> impl_;
};

struct QuadratureConfig {
  double abs_tolerance = 1e-9;
  double scan_step = 0.05;
  double r_max = 16.0;
  /// Integrand cutoff relative to its peak.
  double decay = 1e-16;
  /// Consecutive scan points that must be below the cutoff.
  int decay_window = 3;
  int max_depth = 20;
};

struct MomentResult {
  int n = 0;
  double value = 0.0;
  double error_estimate = 0.0;
  double upper_limit = 0.0;
};

/// I_n = int_0^infty rho^{2n+1} F(rho) d rho on [0, R] with adaptive
/// Gauss-Kronrod quadrature; R is where the integrand has decayed.
MomentResult moment_integral(int n, const DeformationParams& params,
                             const QuadratureConfig& config = {});
MomentResult moment_integral(int n, const RadialMeasure& measure,
                             const QuadratureConfig& config = {});

struct ResolutionResult {
  int dim = 0;
  /// I_n / (n)_{alpha,beta}! for n < dim; off-diagonal entries vanish.
  std::vector<double> diagonal;
  /// max |diagonal - 1| over the first dim - 2 states.
  double residual = 0.0;
};

ResolutionResult resolution_check(int dim, const DeformationParams& params,
                                  const QuadratureConfig& config = {});

}  // namespace gboson
