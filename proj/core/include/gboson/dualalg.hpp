#pragma once

#include <Eigen/Dense>
#include <limits>
#include <map>
#include <vector>

#include "gboson/normal_form.hpp"
#include "gboson/ualg.hpp"

namespace gboson {

struct FTag {};
/// sum x^k p(z - w_{km}) y^m; each sector stores its coefficient function
/// relative to the expansion point w_{km} of the dual basis (see
/// DualAlgebra::center).
using FElement = NormalForm<FTag>;
using FTensor = Tensor<FTag>;

enum class Generator { X, Y, Z };
enum class CoproductForm { Raw, Simplified };

/// Truncation order meaning "keep everything".
inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

/// Two-mode oscillator matrices: x = a_1, y = a_2,
/// z = alpha ln q (n_1 + n_2) + i pi (n_1 - n_2). Index n_1 * D + n_2.
struct OscillatorRep {
  int dim = 0;
  Eigen::MatrixXcd x;
  Eigen::MatrixXcd y;
  Eigen::MatrixXcd z;
};

/// Normal-ordering engine for the dual function algebra
///   [x, y] = 0, [z, x] = -(alpha ln q + i pi) x, [z, y] = -(alpha ln q - i pi) y.
///
/// Series quantities are truncated by total (x, y)-degree k + m of every
/// tensor leg; z-dependence is kept exactly.
class DualAlgebra {
 public:
  explicit DualAlgebra(DeformationParams params);

  const DeformationParams& params() const { return params_; }
  /// alpha ln q + i pi
  Complex c_plus() const { return c_plus_; }
  /// alpha ln q - i pi
  Complex c_minus() const { return c_minus_; }
  /// q^alpha, the base of the curly numbers of the dual basis.
  double curly_base() const { return curly_base_; }

  FElement one() const { return FElement::identity(); }
  FElement x() const;
  FElement y() const;
  FElement z() const;
  FElement exp_z(Complex lambda = 1.0) const;
  FElement generator(Generator g) const;

  /// w_{km} = (alpha/2)(k - m) ln q + i m pi
  Complex center(int k, int m) const;
  /// x^k f(z) y^m for f given as a function of z.
  FElement ordered(int k, int m, const ExpPoly& f) const;
  /// Coefficient function of sector (k, m) as a function of z.
  ExpPoly sector_in_z(const FElement& u, int k, int m) const;

  FElement multiply(const FElement& u, const FElement& v, int order = kUnbounded,
                    DropStats* drops = nullptr) const;
  FElement power(const FElement& u, int n, int order = kUnbounded) const;
  FElement truncated(const FElement& u, int order, DropStats* drops = nullptr) const;

  /// e^{klm} = x^k (z - (alpha/2)(k-m) ln q - i m pi)^l y^m / ({k}! l! {m}!)
  FElement dual_basis_e(int k, int l, int m) const;
  FElement dual_basis_e(BasisIndex i) const { return dual_basis_e(i.k, i.l, i.m); }
  /// Expansion over e^{klm} with l <= max_l (exact when u is polynomial in z).
  std::map<BasisIndex, Complex> basis_change(const FElement& u, int max_l) const;

  FTensor coproduct_generator(Generator g, int order,
                              CoproductForm form = CoproductForm::Simplified) const;
  /// Delta as an algebra map, truncated at `order` per leg.
  FTensor coproduct(const FElement& u, int order, DropStats* drops = nullptr) const;
  FTensor coproduct_on_leg(const FTensor& t, int leg, int order) const;
  FTensor multiply(const FTensor& s, const FTensor& t, int order,
                   DropStats* drops = nullptr) const;

  /// exp(lambda Delta(z)) from its defining differential equation.
  FTensor exp_coproduct_z(Complex lambda, int order) const;
  /// (e^z (x) 1) prod_m P_m (1 (x) e^z).
  FTensor exp_coproduct_z_factorized(int order) const;
  /// Exponent of P_m, the coefficient of y^m (x) x^m.
  Complex factor_exponent(int m) const;

  Complex counit(const FElement& u) const;
  FElement antipode_generator(Generator g, int order) const;
  /// exp(lambda S(z)) from its defining differential equation.
  FElement exp_antipode_z(Complex lambda, int order) const;
  /// S as an anti-homomorphism, truncated at `order`.
  FElement antipode(const FElement& u, int order) const;

  std::vector<CheckResult> homomorphism_check(int order) const;
  std::vector<CheckResult> coassociativity_check(int order) const;
  std::vector<CheckResult> antipode_axiom_check(int order) const;
  std::vector<CheckResult> antihomomorphism_check(int order) const;
  std::vector<CheckResult> coproduct_forms_check(int order) const;

  OscillatorRep oscillator_rep(int dim) const;
  Eigen::MatrixXcd represent(const FElement& u, const OscillatorRep& rep) const;
  Eigen::MatrixXcd represent(const FTensor& t, const OscillatorRep& rep) const;

 private:
  FTensor coproduct_monomial(const LegMonomial& leg, int order) const;
  FElement antipode_monomial(const LegMonomial& leg, int order) const;
  Eigen::MatrixXcd leg_matrix(const LegMonomial& leg, const OscillatorRep& rep) const;

  DeformationParams params_;
  double log_q_;
  Complex c_plus_;
  Complex c_minus_;
  double curly_base_;
};

}  // namespace gboson
