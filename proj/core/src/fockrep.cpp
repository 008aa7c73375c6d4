#include "gboson/fockrep.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "gboson/qspecial.hpp"

namespace gboson {

namespace {

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

}  // namespace

FockSpace::FockSpace(DeformationParams params, int dim)
    : params_(params), dim_(dim) {
  if (dim < 2) throw std::invalid_argument("Fock dimension must be at least 2");
  lower_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    const double b = box_number(n, params_);
    if (b < 0.0)
      throw std::domain_error("box number (" + std::to_string(n) +
                              ") is negative; Fock module not unitarizable");
    lower_(n - 1, n) = std::sqrt(b);
  }
  raise_ = lower_.adjoint();
}

FockOperator FockSpace::a() const { return {lower_, 0}; }

FockOperator FockSpace::adag() const { return {raise_, 1}; }

FockOperator FockSpace::number() const {
  return {function_matrix(ExpPoly::variable() - ExpPoly::constant(params_.ratio())), 0};
}

FockOperator FockSpace::ntilde() const {
  return {function_matrix(ExpPoly::variable()), 0};
}

FockOperator FockSpace::grading() const {
  return {function_matrix(ExpPoly::exponential(Complex(0.0, kPi))), 0};
}

Eigen::MatrixXcd FockSpace::function_matrix(const ExpPoly& f) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int n = 0; n < dim_; ++n) out(n, n) = f(ntilde_value(n));
  return out;
}

Eigen::MatrixXcd FockSpace::leg_matrix(const LegMonomial& leg) const {
  return matrix_power(raise_, leg.k) *
         function_matrix(ExpPoly::monomial(leg.power, leg.exponent)) *
         matrix_power(lower_, leg.m);
}

FockOperator FockSpace::represent(const UElement& u) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& [key, f] : u.terms())
    out += matrix_power(raise_, key.first) * function_matrix(f) *
           matrix_power(lower_, key.second);
  return {out, u.max_left()};
}

Eigen::MatrixXcd FockSpace::represent(const UTensor& t) const {
  long size = 1;
  for (int i = 0; i < t.legs(); ++i) size *= dim_;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
  for (const auto& [key, c] : t.terms()) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1) * c;
    for (const LegMonomial& leg : key) {
      Eigen::MatrixXcd next = Eigen::kroneckerProduct(acc, leg_matrix(leg));
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

Eigen::MatrixXcd FockSpace::tensor_coproduct_matrix(const UElement& u) const {
  return represent(BosonAlgebra(params_).coproduct(u));
}

}  // namespace gboson
