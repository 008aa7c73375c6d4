#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gboson/params.hpp"

namespace gboson {

/// Ansatz parameters of the two-node coherent state
///   c_{n,m} = zeta1^n zeta2^m g_{n,m} / sqrt((n)! (m)!),  g_{0,m} = d_m.
/// An empty `boundary` selects the geometric sequence d_m = delta^m.
struct BipartiteParams {
  Complex zeta{0.4, 0.0};
  Complex zeta1{0.3, 0.0};
  Complex zeta2{0.3, 0.0};
  double delta = 0.5;
  std::vector<double> boundary;

  /// Throws std::invalid_argument for zeta = 0, zeta1 = 0, delta outside
  /// (0, 1] or a boundary entry outside (0, 1].
  void validate() const;

  /// rho1 = (zeta1 / zeta) q^{beta/2}
  Complex rho1(const DeformationParams& params) const;
  /// rho2 = e^{i pi beta/alpha} (zeta2 / zeta) q^{-beta/2}
  Complex rho2(const DeformationParams& params) const;
  /// d_m; throws std::out_of_range past the end of an explicit sequence.
  double boundary_value(int m) const;
};

/// Floor-binomial sum for an arbitrary boundary sequence.
Complex g_general(int n, int m, const BipartiteParams& bp, const DeformationParams& params);
/// q^{-nm alpha/2} delta^m rho1^{-n} (delta rho2; -q^{-alpha})_n.
Complex g_geometric(int n, int m, const BipartiteParams& bp, const DeformationParams& params);

/// g_{n,m} for n, m < dim, geometric or general per `bp.boundary`.
Eigen::MatrixXcd g_matrix(const BipartiteParams& bp, const DeformationParams& params, int dim);

/// max |rho1 q^{m alpha/2} g_{n+1,m} + (-1)^n rho2 q^{-n alpha/2} g_{n,m+1} - g_{n,m}|
/// over n, m <= dim - 2.
double g_recurrence_residual(const Eigen::MatrixXcd& g, const BipartiteParams& bp,
                             const DeformationParams& params);
/// Same for the coefficient recurrence
///   c_{n+1,m} sqrt((n+1)) q^{(m alpha+beta)/2}
///     + c_{n,m+1} e^{i pi (n+beta/alpha)} sqrt((m+1)) q^{-(n alpha+beta)/2} = zeta c_{n,m}.
double c_recurrence_residual(const Eigen::MatrixXcd& c, const BipartiteParams& bp,
                             const DeformationParams& params);

struct BipartiteState {
  Eigen::MatrixXcd coefficients;
  BipartiteParams params;
  bool normalized = false;
  /// Norm used for normalization; 1 for unnormalized states.
  double norm = 1.0;
};

/// c_{n,m} for n, m < dim. With `normalize` the matrix is divided by the
/// square root of the single-sum norm (geometric boundary only).
/// Throws std::overflow_error when an entry is not finite.
BipartiteState assemble_state(const BipartiteParams& bp, const DeformationParams& params, int dim,
                              bool normalize = false);

struct EigenResidual {
  /// Norm of (Delta(a) - zeta)|z> on components n, m <= dim - 2.
  double interior = 0.0;
  /// Norm over all components, including the truncated edge.
  double full = 0.0;
};

EigenResidual eigen_residual(const BipartiteState& state, const DeformationParams& params);

struct NormComparison {
  double double_sum = 0.0;
  double single_sum = 0.0;
  int terms = 0;

  double relative_gap() const;
};

/// Sum of |c_{n,m}|^2 against the single sum with the inner deformed
/// exponential; geometric boundary only. Throws SeriesNotConverged when
/// either sum fails to settle within `max_terms` indices.
NormComparison norm_check(const BipartiteParams& bp, const DeformationParams& params,
                          int max_terms = 400);

/// -sum p_i ln p_i with p_i the normalized squared singular values.
double schmidt_entropy(const Eigen::MatrixXcd& coefficients);

}  // namespace gboson
