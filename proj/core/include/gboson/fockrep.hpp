#pragma once

#include <Eigen/Dense>

#include "gboson/ualg.hpp"

namespace gboson {

/// Truncated operator matrix. Products of operators are exact on basis
/// states |n> with n < D - margin.
struct FockOperator {
  Eigen::MatrixXcd matrix;
  int margin = 0;
};

/// Fock module |0>, ..., |D-1> of the generalized boson algebra:
///   a|n> = sqrt((n)_{alpha,beta}) |n-1>, Ntilde|n> = (n + beta/alpha)|n>.
class FockSpace {
 public:
  /// Throws std::domain_error if some (n)_{alpha,beta} < 0 for n < D.
  FockSpace(DeformationParams params, int dim);

  int dim() const { return dim_; }
  const DeformationParams& params() const { return params_; }
  double ntilde_value(int n) const { return n + params_.ratio(); }

  FockOperator a() const;
  FockOperator adag() const;
  FockOperator number() const;
  FockOperator ntilde() const;
  /// (-1)^{Ntilde}|n> = e^{i pi beta/alpha} (-1)^n |n>
  FockOperator grading() const;

  /// Evaluates every f(Ntilde) at n + beta/alpha.
  FockOperator represent(const UElement& u) const;
  /// Kronecker assembly over the tensor legs (leg 0 is the slow index).
  Eigen::MatrixXcd represent(const UTensor& t) const;

  /// Matrix of Delta(u) on the D^2-dimensional two-node space.
  Eigen::MatrixXcd tensor_coproduct_matrix(const UElement& u) const;

 private:
  Eigen::MatrixXcd function_matrix(const ExpPoly& f) const;
  Eigen::MatrixXcd leg_matrix(const LegMonomial& leg) const;

  DeformationParams params_;
  int dim_;
  Eigen::MatrixXcd lower_;
  Eigen::MatrixXcd raise_;
};

}  // namespace gboson
