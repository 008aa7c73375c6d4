#pragma once

#include <span>
#include <vector>

#include "gboson/params.hpp"

namespace gboson {

/// Exponential polynomial sum_i c_i t^{l_i} e^{lambda_i t} in one commuting
/// variable t, kept in canonical form.
class ExpPoly {
 public:
  struct Term {
    int power = 0;
    Complex exponent;
    Complex coeff;
  };

  static constexpr int kMaxPower = 64;
  static constexpr double kExponentTolerance = 1e-12;

  ExpPoly() = default;
  explicit ExpPoly(std::vector<Term> terms);

  static ExpPoly constant(Complex c);
  /// c t^power e^{exponent t}
  static ExpPoly monomial(int power, Complex exponent = 0.0, Complex coeff = 1.0);
  static ExpPoly variable() { return monomial(1); }
  static ExpPoly exponential(Complex exponent, Complex coeff = 1.0) {
    return monomial(0, exponent, coeff);
  }

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every exponent is zero.
  bool is_polynomial() const;
  int max_power() const;
  double max_abs_coeff() const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(const ExpPoly& other);
  ExpPoly& operator*=(Complex s);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
  friend ExpPoly operator*(ExpPoly a, Complex s) { return a *= s; }
  friend ExpPoly operator*(Complex s, ExpPoly a) { return a *= s; }
  ExpPoly operator-() const { return *this * Complex(-1.0); }

  /// p(t + s)
  ExpPoly shifted(Complex s) const;
  /// p(-t)
  ExpPoly reflected() const;
  /// p(t)^n
  ExpPoly pow(int n) const;

  Complex operator()(Complex t) const;

  /// Coefficients of t^0..t^up_to of the entire function p.
  std::vector<Complex> taylor_coefficients(int up_to) const;

  /// Terms of both within `tol` after subtraction.
  friend bool approx_equal(const ExpPoly& a, const ExpPoly& b, double tol);

 private:
  void canonicalize();

  std::vector<Term> terms_;
};

/// Snap every exponent in `values` onto the first earlier value within
/// ExpPoly::kExponentTolerance, so equal exponents compare exactly.
void cluster_exponents(std::vector<Complex*>& values);

/// Strict ordering on complex numbers (real part first).
inline bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace gboson
