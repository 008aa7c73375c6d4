#include "gboson/dualalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gboson/qspecial.hpp"

namespace gboson {

namespace {

const Complex kI(0.0, 1.0);

std::function<bool(const LegMonomial&)> degree_filter(int order) {
  return [order](const LegMonomial& leg) { return leg.k + leg.m <= order; };
}

// psi_0 = 1, psi_M' = sum_{m=1}^{M} w[m] e^{r[m] s} psi_{M-m}, psi_M(0) = 0,
// solved by Taylor series in s and evaluated at s. Returns psi_0..psi_order.
std::vector<Complex> graded_flow(const std::vector<Complex>& w,
                                 const std::vector<Complex>& r, int order,
                                 Complex s) {
  constexpr int kTerms = 260;
  std::vector<std::vector<Complex>> a(order + 1, std::vector<Complex>(kTerms, 0.0));
  a[0][0] = 1.0;
  std::vector<std::vector<Complex>> exp_series(order + 1, std::vector<Complex>(kTerms));
  for (int m = 1; m <= order; ++m) {
    Complex c = 1.0;
    for (int i = 0; i < kTerms; ++i) {
      exp_series[m][i] = c;
      c *= r[m] / double(i + 1);
    }
  }
  for (int big_m = 1; big_m <= order; ++big_m) {
    for (int j = 0; j + 1 < kTerms; ++j) {
      Complex b = 0.0;
      for (int m = 1; m <= big_m; ++m)
        for (int i = 0; i <= j; ++i) b += w[m] * exp_series[m][i] * a[big_m - m][j - i];
      a[big_m][j + 1] = b / double(j + 1);
    }
  }
  std::vector<Complex> out(order + 1);
  for (int big_m = 0; big_m <= order; ++big_m) {
    Complex acc = 0.0;
    for (int j = kTerms - 1; j >= 0; --j) acc = acc * s + a[big_m][j];
    const double tail = std::abs(a[big_m][kTerms - 1] * std::pow(s, kTerms - 1));
    if (!(tail <= 1e-30 * std::max(1.0, std::abs(acc))))
      throw std::runtime_error("graded exponential series did not converge");
    out[big_m] = acc;
  }
  return out;
}

double residual_scale(std::initializer_list<double> magnitudes) {
  double out = 1.0;
  for (double m : magnitudes) out = std::max(out, m);
  return out;
}

}  // namespace

DualAlgebra::DualAlgebra(DeformationParams params)
    : params_(params),
      log_q_(params.log_q()),
      c_plus_(params.alpha() * params.log_q(), kPi),
      c_minus_(params.alpha() * params.log_q(), -kPi),
      curly_base_(std::exp(params.alpha() * params.log_q())) {}

FElement DualAlgebra::x() const { return FElement::term(1, 0, ExpPoly::constant(1.0)); }
FElement DualAlgebra::y() const { return FElement::term(0, 1, ExpPoly::constant(1.0)); }
FElement DualAlgebra::z() const { return FElement::term(0, 0, ExpPoly::variable()); }

FElement DualAlgebra::exp_z(Complex lambda) const {
  return FElement::term(0, 0, ExpPoly::exponential(lambda));
}

FElement DualAlgebra::generator(Generator g) const {
  switch (g) {
    case Generator::X: return x();
    case Generator::Y: return y();
    case Generator::Z: return z();
  }
  throw std::invalid_argument("unknown generator");
}

Complex DualAlgebra::center(int k, int m) const {
  return 0.5 * params_.alpha() * (k - m) * log_q_ + kI * (m * kPi);
}

FElement DualAlgebra::ordered(int k, int m, const ExpPoly& f) const {
  return FElement::term(k, m, f.shifted(center(k, m)));
}

ExpPoly DualAlgebra::sector_in_z(const FElement& u, int k, int m) const {
  const auto it = u.terms().find({k, m});
  return it == u.terms().end() ? ExpPoly() : it->second.shifted(-center(k, m));
}

FElement DualAlgebra::multiply(const FElement& u, const FElement& v, int order,
                               DropStats* drops) const {
  // x^k p(z) y^m x^k' r(z) y^m' = x^{k+k'} p(z - k' c+) r(z + m c-) y^{m+m'},
  // re-expanded about the center of the product sector.
  FElement out;
  for (const auto& [ku, p] : u.terms()) {
    for (const auto& [kv, r] : v.terms()) {
      const int k = ku.first + kv.first;
      const int m = ku.second + kv.second;
      const Complex target = center(k, m);
      const Complex left = target - center(ku.first, ku.second) - double(kv.first) * c_plus_;
      const Complex right = target - center(kv.first, kv.second) + double(ku.second) * c_minus_;
      ExpPoly prod = p.shifted(left) * r.shifted(right);
      if (k + m > order) {
        if (drops && !prod.is_zero()) drops->record(prod.max_abs_coeff());
        continue;
      }
      out.add_term(k, m, prod);
    }
  }
  return out;
}

FElement DualAlgebra::power(const FElement& u, int n, int order) const {
  FElement out = one();
  for (int i = 0; i < n; ++i) out = multiply(out, u, order);
  return out;
}

FElement DualAlgebra::truncated(const FElement& u, int order, DropStats* drops) const {
  FElement out;
  for (const auto& [key, f] : u.terms()) {
    if (key.first + key.second <= order)
      out.add_term(key.first, key.second, f);
    else if (drops)
      drops->record(f.max_abs_coeff());
  }
  return out;
}

FElement DualAlgebra::dual_basis_e(int k, int l, int m) const {
  const double norm = curly_factorial(k, curly_base_) * std::tgamma(l + 1.0) *
                      curly_factorial(m, curly_base_);
  return FElement::term(k, m, ExpPoly::monomial(l, 0.0, 1.0 / norm));
}

std::map<BasisIndex, Complex> DualAlgebra::basis_change(const FElement& u,
                                                        int max_l) const {
  std::map<BasisIndex, Complex> out;
  for (const auto& [key, p] : u.terms()) {
    const auto [k, m] = key;
    // p is stored as a function of z - w_{km}
    const auto c = p.taylor_coefficients(max_l);
    const double km = curly_factorial(k, curly_base_) * curly_factorial(m, curly_base_);
    double jfact = 1.0;
    for (int j = 0; j <= max_l; ++j) {
      if (j > 0) jfact *= j;
      if (c[j] != Complex(0.0)) out[{k, j, m}] = km * jfact * c[j];
    }
  }
  return out;
}

FTensor DualAlgebra::coproduct_generator(Generator g, int order,
                                         CoproductForm form) const {
  const double b = curly_base_;
  const double qmi = params_.q_minus_inverse();
  const double kfac = 2.0 * params_.alpha() * log_q_ / qmi;
  const auto xm = [](int k) { return FElement::term(k, 0, ExpPoly::constant(1.0)); };
  const auto ym = [](int m) { return FElement::term(0, m, ExpPoly::constant(1.0)); };
  const auto fill = [&](int k, int m, Complex c, bool ez) {
    return ez ? ordered(k, m, ExpPoly::exponential(1.0, c))
              : FElement::term(k, m, ExpPoly::constant(c));
  };

  FTensor out(2);
  switch (g) {
    case Generator::X: {
      if (order >= 1) out.append_product({x(), one()}, 1.0);
      for (int m = 0; m + 1 <= order; ++m) {
        Complex c;
        if (form == CoproductForm::Raw) {
          c = std::pow(-1.0, m) * std::exp(0.5 * m * params_.alpha() * log_q_) *
              sigma(m + 1, params_) /
              (curly_factorial(m, b) * curly_factorial(m + 1, b));
        } else {
          c = std::pow(-1.0, m) * std::pow((b + 1.0) / qmi, m);
        }
        out.append_product({fill(0, m, c, true), xm(m + 1)}, 1.0);
      }
      break;
    }
    case Generator::Z: {
      out.append_product({z(), one()}, 1.0);
      out.append_product({one(), z()}, 1.0);
      for (int m = 1; m <= order; ++m) {
        Complex c;
        if (form == CoproductForm::Raw) {
          const double f = curly_factorial(m, b);
          c = kfac * sigma(m, params_) / (f * f);
        } else {
          c = kfac / curly_number(m, b) *
              std::pow(params_.half_alpha_sum() / qmi, m - 1);
        }
        out.append_product({fill(0, m, c, false), xm(m)}, 1.0);
      }
      break;
    }
    case Generator::Y: {
      if (order >= 1) out.append_product({one(), y()}, 1.0);
      for (int m = 0; m + 1 <= order; ++m) {
        Complex c;
        if (form == CoproductForm::Raw) {
          c = std::exp(-0.5 * m * params_.alpha() * log_q_) * sigma(m + 1, params_) /
              (curly_factorial(m + 1, b) * curly_factorial(m, b));
        } else {
          c = std::pow((1.0 + 1.0 / b) / qmi, m);
        }
        out.append_product({ym(m + 1), fill(m, 0, c, true)}, 1.0);
      }
      break;
    }
  }
  out.canonicalize();
  return out;
}

FTensor DualAlgebra::multiply(const FTensor& s, const FTensor& t, int order,
                              DropStats* drops) const {
  return tensor_multiply(
      s, t,
      [&](const FElement& u, const FElement& v) { return multiply(u, v); },
      degree_filter(order), drops);
}

Complex DualAlgebra::factor_exponent(int m) const {
  const double b = curly_base_;
  return std::pow(-1.0, m) * q_number(m * params_.alpha(), params_) /
         (m * curly_number(m, b)) *
         std::pow(params_.half_alpha_sum() / params_.q_minus_inverse(), m - 1);
}

FTensor DualAlgebra::exp_coproduct_z(Complex lambda, int order) const {
  // exp(s Delta z) = sum_M psi_M(s) e^{-s M c+} e^{s z} y^M (x) x^M e^{s z} with
  // psi_M' = sum_m kappa_m e^{m (c+ + c-) s} psi_{M-m}.
  const double b = curly_base_;
  const double qmi = params_.q_minus_inverse();
  const double kfac = 2.0 * params_.alpha() * log_q_ / qmi;
  std::vector<Complex> w(order + 1, 0.0), r(order + 1, 0.0);
  for (int m = 1; m <= order; ++m) {
    w[m] = kfac / curly_number(m, b) * std::pow(params_.half_alpha_sum() / qmi, m - 1);
    r[m] = double(m) * (c_plus_ + c_minus_);
  }
  const auto psi = graded_flow(w, r, order, lambda);
  FTensor out(2);
  for (int big_m = 0; big_m <= order; ++big_m) {
    const Complex c = psi[big_m] * std::exp(-lambda * double(big_m) * c_plus_);
    out.append_product({ordered(0, big_m, ExpPoly::exponential(lambda)),
                        ordered(big_m, 0, ExpPoly::exponential(lambda))},
                       c);
  }
  out.canonicalize();
  return out;
}

FTensor DualAlgebra::exp_coproduct_z_factorized(int order) const {
  FTensor out = FTensor::from_legs({exp_z(1.0), one()});
  for (int m = 1; m <= order; ++m) {
    const Complex p = factor_exponent(m);
    FTensor factor(2);
    Complex c = 1.0;
    for (int j = 0; j * m <= order; ++j) {
      factor.append_product({FElement::term(0, j * m, ExpPoly::constant(1.0)),
                             FElement::term(j * m, 0, ExpPoly::constant(1.0))},
                            c);
      c *= p / double(j + 1);
    }
    factor.canonicalize();
    out = multiply(out, factor, order);
  }
  return multiply(out, FTensor::from_legs({one(), exp_z(1.0)}), order);
}

FTensor DualAlgebra::coproduct_monomial(const LegMonomial& leg, int order) const {
  // x^k (z - w)^p e^{lambda (z - w)} y^m
  const Complex w = center(leg.k, leg.m);
  FTensor out = FTensor::from_legs({one(), one()});
  if (leg.k > 0) {
    const FTensor dx = coproduct_generator(Generator::X, order);
    for (int i = 0; i < leg.k; ++i) out = multiply(out, dx, order);
  }
  if (leg.power > 0) {
    const FTensor dz =
        coproduct_generator(Generator::Z, order) - FTensor::from_legs({one(), one()}) * w;
    for (int i = 0; i < leg.power; ++i) out = multiply(out, dz, order);
  }
  if (leg.exponent != Complex(0.0))
    out = multiply(out, exp_coproduct_z(leg.exponent, order) * std::exp(-leg.exponent * w),
                   order);
  if (leg.m > 0) {
    const FTensor dy = coproduct_generator(Generator::Y, order);
    for (int i = 0; i < leg.m; ++i) out = multiply(out, dy, order);
  }
  return out;
}

FTensor DualAlgebra::coproduct(const FElement& u, int order, DropStats* drops) const {
  FTensor out(2);
  for (const auto& [leg, c] : leg_terms(u)) {
    const FTensor piece = coproduct_monomial(leg, order);
    for (const auto& [key, cc] : piece.terms()) out.add(key, c * cc);
  }
  out.canonicalize();
  return drops ? out.filtered(degree_filter(order), drops) : out;
}

FTensor DualAlgebra::coproduct_on_leg(const FTensor& t, int leg, int order) const {
  return map_leg(t, leg,
                 [&](const LegMonomial& lm) { return coproduct_monomial(lm, order); });
}

Complex DualAlgebra::counit(const FElement& u) const {
  auto it = u.terms().find({0, 0});
  return it == u.terms().end() ? Complex(0.0) : it->second(0.0);
}

FElement DualAlgebra::antipode_generator(Generator g, int order) const {
  const double b = curly_base_;
  const double half = 0.5 * params_.alpha() * log_q_;
  const double kfac = 2.0 * params_.alpha() * log_q_ / params_.q_minus_inverse();
  FElement out;
  switch (g) {
    case Generator::X:
      for (int m = 0; 2 * m + 1 <= order; ++m) {
        const Complex c = std::pow(-1.0, m) * std::exp((m + 2) * half) *
                          sigma(m + 1, params_) /
                          (curly_factorial(m + 1, b) * curly_factorial(m, b));
        out += ordered(m + 1, m, ExpPoly::exponential(-double(m + 1), c));
      }
      break;
    case Generator::Z:
      out.add_term(0, 0, ExpPoly::monomial(1, 0.0, -1.0));
      for (int m = 1; 2 * m <= order; ++m) {
        const double f = curly_factorial(m, b);
        out += ordered(m, m, ExpPoly::exponential(-double(m), kfac * sigma(m, params_) / (f * f)));
      }
      break;
    case Generator::Y:
      for (int m = 0; 2 * m + 1 <= order; ++m) {
        const Complex c = std::exp(-(m + 2) * half) * sigma(m + 1, params_) /
                          (curly_factorial(m, b) * curly_factorial(m + 1, b));
        out += ordered(m, m + 1, ExpPoly::exponential(-double(m + 1), c));
      }
      break;
  }
  return out;
}

FElement DualAlgebra::exp_antipode_z(Complex lambda, int order) const {
  // exp(s S(z)) = sum_M omega_M(s) e^{s M c+} x^M e^{-(s + M) z} y^M with
  // omega_M' = sum_m kappa'_m e^{-2 m alpha ln q s} omega_{M-m}.
  const int levels = order / 2;
  const double b = curly_base_;
  const double kfac = 2.0 * params_.alpha() * log_q_ / params_.q_minus_inverse();
  std::vector<Complex> w(levels + 1, 0.0), r(levels + 1, 0.0);
  for (int m = 1; m <= levels; ++m) {
    const double f = curly_factorial(m, b);
    w[m] = kfac * sigma(m, params_) / (f * f);
    r[m] = -2.0 * m * params_.alpha() * log_q_;
  }
  const auto omega = graded_flow(w, r, levels, lambda);
  FElement out;
  for (int big_m = 0; big_m <= levels; ++big_m) {
    const Complex c = omega[big_m] * std::exp(lambda * double(big_m) * c_plus_);
    out += ordered(big_m, big_m, ExpPoly::exponential(-(lambda + double(big_m)), c));
  }
  return out;
}

FElement DualAlgebra::antipode_monomial(const LegMonomial& leg, int order) const {
  // x^k (z - w)^p e^{lambda (z - w)} y^m
  const Complex w = center(leg.k, leg.m);
  FElement out = power(antipode_generator(Generator::Y, order), leg.m, order);
  if (leg.exponent != Complex(0.0))
    out = multiply(out, exp_antipode_z(leg.exponent, order) * std::exp(-leg.exponent * w), order);
  const FElement sz = antipode_generator(Generator::Z, order) - one() * w;
  out = multiply(out, power(sz, leg.power, order), order);
  return multiply(out, power(antipode_generator(Generator::X, order), leg.k, order), order);
}

FElement DualAlgebra::antipode(const FElement& u, int order) const {
  FElement out;
  for (const auto& [leg, c] : leg_terms(u)) out += antipode_monomial(leg, order) * c;
  return out;
}

std::vector<CheckResult> DualAlgebra::homomorphism_check(int order) const {
  constexpr double kTol = 1e-10;
  const FTensor dx = coproduct_generator(Generator::X, order);
  const FTensor dy = coproduct_generator(Generator::Y, order);
  const FTensor dz = coproduct_generator(Generator::Z, order);
  const auto mul = [&](const FTensor& s, const FTensor& t) { return multiply(s, t, order); };
  const double scale = residual_scale(
      {dx.max_abs_coeff(), dy.max_abs_coeff(), dz.max_abs_coeff()});

  const FTensor r1 = mul(dx, dy) - mul(dy, dx);
  const FTensor r2 = mul(dz, dx) - mul(dx, dz) + dx * c_plus_;
  const FTensor r3 = mul(dz, dy) - mul(dy, dz) + dy * c_minus_;
  const std::string note = "relative to max coefficient " + std::to_string(scale);
  return {
      {"homomorphism [D(x),D(y)]", r1.max_abs_coeff() / scale, kTol, note},
      {"homomorphism [D(z),D(x)]", r2.max_abs_coeff() / scale, kTol, note},
      {"homomorphism [D(z),D(y)]", r3.max_abs_coeff() / scale, kTol, note},
  };
}

std::vector<CheckResult> DualAlgebra::coassociativity_check(int order) const {
  constexpr double kTol = 1e-10;
  std::vector<CheckResult> out;
  // Legs of degree above 2 * order cannot split into two legs of degree <= order.
  const int inner = 2 * order;
  const auto keep = degree_filter(order);
  const std::pair<const char*, Generator> gens[] = {
      {"x", Generator::X}, {"y", Generator::Y}, {"z", Generator::Z}};
  for (const auto& [name, g] : gens) {
    const FTensor d = coproduct_generator(g, inner);
    const FTensor left = coproduct_on_leg(d, 0, order).filtered(keep);
    const FTensor right = coproduct_on_leg(d, 1, order).filtered(keep);
    const double scale = residual_scale({left.max_abs_coeff(), right.max_abs_coeff()});
    out.push_back({std::string("coassociativity(") + name + ")",
                   (left - right).max_abs_coeff() / scale, kTol,
                   "relative to max coefficient " + std::to_string(scale)});
  }
  const FTensor ode = exp_coproduct_z(1.0, order);
  const FTensor factorized = exp_coproduct_z_factorized(order);
  const double scale = residual_scale({ode.max_abs_coeff(), factorized.max_abs_coeff()});
  out.push_back({"exp(D(z)) factorization", (ode - factorized).max_abs_coeff() / scale,
                 kTol, "relative to max coefficient " + std::to_string(scale)});
  return out;
}

std::vector<CheckResult> DualAlgebra::antipode_axiom_check(int order) const {
  constexpr double kTol = 1e-10;
  std::vector<CheckResult> out;
  const auto s_leg = [&](const LegMonomial& lm) {
    return FTensor::from_element(antipode_monomial(lm, order));
  };
  const auto mul = [&](const FElement& u, const FElement& v) { return multiply(u, v, order); };
  const std::pair<const char*, Generator> gens[] = {
      {"x", Generator::X}, {"y", Generator::Y}, {"z", Generator::Z}};
  for (const auto& [name, g] : gens) {
    const FTensor d = coproduct_generator(g, order);
    const FElement unit = one() * counit(generator(g));
    const FElement left = contract(map_leg(d, 0, s_leg), mul) - unit;
    const FElement right = contract(map_leg(d, 1, s_leg), mul) - unit;
    const double scale = residual_scale({d.max_abs_coeff()});
    const std::string note = "relative to max coefficient " + std::to_string(scale);
    out.push_back({std::string("antipode m(S x id)D(") + name + ")",
                   left.max_abs_coeff() / scale, kTol, note});
    out.push_back({std::string("antipode m(id x S)D(") + name + ")",
                   right.max_abs_coeff() / scale, kTol, note});
  }
  return out;
}

std::vector<CheckResult> DualAlgebra::antihomomorphism_check(int order) const {
  constexpr double kTol = 1e-10;
  const FElement sx = antipode_generator(Generator::X, order);
  const FElement sy = antipode_generator(Generator::Y, order);
  const FElement sz = antipode_generator(Generator::Z, order);
  const auto mul = [&](const FElement& u, const FElement& v) { return multiply(u, v, order); };
  const double scale =
      residual_scale({sx.max_abs_coeff(), sy.max_abs_coeff(), sz.max_abs_coeff()});
  // S(zx - xz) = S(x)S(z) - S(z)S(x) = -c+ S(x), and likewise for y.
  const FElement r1 = mul(sx, sy) - mul(sy, sx);
  const FElement r2 = mul(sx, sz) - mul(sz, sx) + sx * c_plus_;
  const FElement r3 = mul(sy, sz) - mul(sz, sy) + sy * c_minus_;
  const std::string note = "relative to max coefficient " + std::to_string(scale);
  return {
      {"antihomomorphism [x,y]", r1.max_abs_coeff() / scale, kTol, note},
      {"antihomomorphism [z,x]", r2.max_abs_coeff() / scale, kTol, note},
      {"antihomomorphism [z,y]", r3.max_abs_coeff() / scale, kTol, note},
  };
}

std::vector<CheckResult> DualAlgebra::coproduct_forms_check(int order) const {
  constexpr double kTol = 1e-10;
  std::vector<CheckResult> out;
  const std::pair<const char*, Generator> gens[] = {
      {"x", Generator::X}, {"y", Generator::Y}, {"z", Generator::Z}};
  for (const auto& [name, g] : gens) {
    const FTensor raw = coproduct_generator(g, order, CoproductForm::Raw);
    const FTensor simple = coproduct_generator(g, order, CoproductForm::Simplified);
    const double scale = residual_scale({raw.max_abs_coeff(), simple.max_abs_coeff()});
    out.push_back({std::string("raw vs simplified D(") + name + ")",
                   (raw - simple).max_abs_coeff() / scale, kTol,
                   "relative to max coefficient " + std::to_string(scale)});
  }
  return out;
}

OscillatorRep DualAlgebra::oscillator_rep(int dim) const {
  if (dim < 2) throw std::invalid_argument("oscillator dimension must be at least 2");
  const int size = dim * dim;
  OscillatorRep rep{dim, Eigen::MatrixXcd::Zero(size, size), Eigen::MatrixXcd::Zero(size, size),
                    Eigen::MatrixXcd::Zero(size, size)};
  for (int n1 = 0; n1 < dim; ++n1) {
    for (int n2 = 0; n2 < dim; ++n2) {
      const int i = n1 * dim + n2;
      if (n1 > 0) rep.x((n1 - 1) * dim + n2, i) = std::sqrt(double(n1));
      if (n2 > 0) rep.y(n1 * dim + n2 - 1, i) = std::sqrt(double(n2));
      rep.z(i, i) = params_.alpha() * log_q_ * double(n1 + n2) + kI * (kPi * (n1 - n2));
    }
  }
  return rep;
}

Eigen::MatrixXcd DualAlgebra::leg_matrix(const LegMonomial& leg,
                                         const OscillatorRep& rep) const {
  const long size = rep.x.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(size, size);
  for (int i = 0; i < leg.k; ++i) out = out * rep.x;
  const ExpPoly f = ExpPoly::monomial(leg.power, leg.exponent);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(size, size);
  const Complex w = center(leg.k, leg.m);
  for (long i = 0; i < size; ++i) diag(i, i) = f(rep.z(i, i) - w);
  out = out * diag;
  for (int i = 0; i < leg.m; ++i) out = out * rep.y;
  return out;
}

Eigen::MatrixXcd DualAlgebra::represent(const FElement& u, const OscillatorRep& rep) const {
  const long size = rep.x.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
  for (const auto& [leg, c] : leg_terms(u)) out += c * leg_matrix(leg, rep);
  return out;
}

Eigen::MatrixXcd DualAlgebra::represent(const FTensor& t, const OscillatorRep& rep) const {
  long size = 1;
  for (int i = 0; i < t.legs(); ++i) size *= rep.x.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
  std::map<LegMonomial, Eigen::MatrixXcd> cache;
  for (const auto& [key, c] : t.terms()) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1) * c;
    for (const LegMonomial& leg : key) {
      auto it = cache.find(leg);
      if (it == cache.end()) it = cache.emplace(leg, leg_matrix(leg, rep)).first;
      Eigen::MatrixXcd next(acc.rows() * it->second.rows(), acc.cols() * it->second.cols());
      for (long i = 0; i < acc.rows(); ++i)
        for (long j = 0; j < acc.cols(); ++j)
          next.block(i * it->second.rows(), j * it->second.cols(), it->second.rows(),
                     it->second.cols()) = acc(i, j) * it->second;
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

}  // namespace gboson
