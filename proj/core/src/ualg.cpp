#include "gboson/ualg.hpp"

#include <cmath>

namespace gboson {

namespace {

const Complex kI(0.0, 1.0);

double binomial(int n, int k) {
  double out = 1.0;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

BosonAlgebra::BosonAlgebra(DeformationParams params)
    : params_(params), half_log_(0.5 * params.alpha() * params.log_q()) {}

UElement BosonAlgebra::a() const { return UElement::term(0, 1, ExpPoly::constant(1.0)); }

UElement BosonAlgebra::adag() const {
  return UElement::term(1, 0, ExpPoly::constant(1.0));
}

UElement BosonAlgebra::ntilde() const { return function(ExpPoly::variable()); }

UElement BosonAlgebra::number() const {
  return function(ExpPoly::variable() - ExpPoly::constant(params_.ratio()));
}

UElement BosonAlgebra::grading() const {
  return function(ExpPoly::exponential(kI * kPi));
}

ExpPoly BosonAlgebra::alpha_bracket() const { return alpha_bracket(0.0); }

ExpPoly BosonAlgebra::alpha_bracket(double s) const {
  const double rate = 2.0 * half_log_;
  const double d = params_.q_minus_inverse();
  return ExpPoly::exponential(rate, std::exp(rate * s) / d) +
         ExpPoly::exponential(-rate, -std::exp(-rate * s) / d);
}

UElement BosonAlgebra::lmul_a(const UElement& v) const {
  // a a^dagger^k = a^dagger^{k-1} phi_k(Ntilde) + (-1)^k a^dagger^k a with
  // phi_k(t) = sum_{j=1}^{k} (-1)^{k-j} [alpha (t + j - 1)]_q.
  UElement out;
  std::vector<ExpPoly> phi(1);
  for (const auto& [key, f] : v.terms()) {
    const auto [k, m] = key;
    while (static_cast<int>(phi.size()) <= k) {
      const int j = static_cast<int>(phi.size());
      phi.push_back(alpha_bracket(j - 1) - phi.back());
    }
    if (k >= 1) out.add_term(k - 1, m, phi[k] * f);
    const ExpPoly shifted = f.shifted(1.0);
    out.add_term(k, m + 1, (k % 2 == 0) ? shifted : -shifted);
  }
  return out;
}

UElement BosonAlgebra::multiply(const UElement& u, const UElement& v) const {
  std::vector<UElement> lowered{v};
  UElement out;
  for (const auto& [key, f] : u.terms()) {
    const auto [k, m] = key;
    while (static_cast<int>(lowered.size()) <= m) lowered.push_back(lmul_a(lowered.back()));
    // f(Ntilde) a^dagger^{k'} = a^dagger^{k'} f(Ntilde + k')
    for (const auto& [key2, g] : lowered[m].terms())
      out.add_term(k + key2.first, key2.second, f.shifted(double(key2.first)) * g);
  }
  return out;
}

UElement BosonAlgebra::power(const UElement& u, int n) const {
  UElement out = one();
  for (int i = 0; i < n; ++i) out = multiply(out, u);
  return out;
}

UElement BosonAlgebra::commutator(const UElement& u, const UElement& v) const {
  return multiply(u, v) - multiply(v, u);
}

UElement BosonAlgebra::basis_E(int k, int l, int m) const {
  return UElement::term(k, m, ExpPoly::monomial(l));
}

std::map<BasisIndex, Complex> BosonAlgebra::e_coefficients(const UElement& u,
                                                           int max_l) const {
  std::map<BasisIndex, Complex> out;
  for (const auto& [key, f] : u.terms()) {
    const auto coeffs = f.taylor_coefficients(max_l);
    for (int j = 0; j <= max_l; ++j)
      if (coeffs[j] != Complex(0.0)) out[{key.first, j, key.second}] = coeffs[j];
  }
  return out;
}

StructureTable BosonAlgebra::extract_f(BasisIndex i, BasisIndex j, int max_l) const {
  StructureTable table;
  table.kind = StructureTable::Kind::Product;
  for (const auto& [idx, c] : e_coefficients(multiply(basis_E(i), basis_E(j)), max_l))
    table.entries[{idx.k, idx.l, idx.m}] = c;
  return table;
}

StructureTable BosonAlgebra::tensor_coefficients(const UTensor& t, int max_l) const {
  if (t.legs() != 2) throw std::invalid_argument("tensor_coefficients requires two legs");
  StructureTable table;
  table.kind = StructureTable::Kind::Coproduct;
  for (const auto& [key, c] : t.terms()) {
    const auto left = ExpPoly::monomial(key[0].power, key[0].exponent).taylor_coefficients(max_l);
    const auto right = ExpPoly::monomial(key[1].power, key[1].exponent).taylor_coefficients(max_l);
    for (int p = 0; p <= max_l; ++p) {
      if (left[p] == Complex(0.0)) continue;
      for (int r = 0; r <= max_l; ++r) {
        if (right[r] == Complex(0.0)) continue;
        table.entries[{key[0].k, p, key[0].m, key[1].k, r, key[1].m}] +=
            c * left[p] * right[r];
      }
    }
  }
  return table;
}

StructureTable BosonAlgebra::extract_g(BasisIndex i, int max_l) const {
  return tensor_coefficients(coproduct(basis_E(i)), max_l);
}

UTensor BosonAlgebra::coproduct_monomial(const LegMonomial& leg) const {
  const auto fn = [](Complex rate, Complex c = 1.0) {
    return UElement::term(0, 0, ExpPoly::exponential(rate, c));
  };
  UTensor dadag(2), da(2);
  // Delta(a^dagger) = a^dagger (x) q^{alpha Nt/2} + e^{-i pi Nt} q^{-alpha Nt/2} (x) a^dagger
  dadag.append_product({adag(), fn(half_log_)}, 1.0);
  dadag.append_product({fn(-kI * kPi - half_log_), adag()}, 1.0);
  dadag.canonicalize();
  // Delta(a) = a (x) q^{alpha Nt/2} + e^{i pi Nt} q^{-alpha Nt/2} (x) a
  da.append_product({a(), fn(half_log_)}, 1.0);
  da.append_product({fn(kI * kPi - half_log_), a()}, 1.0);
  da.canonicalize();

  UTensor dfun(2);
  for (int j = 0; j <= leg.power; ++j) {
    dfun.append_product({function(ExpPoly::monomial(j, leg.exponent)),
                         function(ExpPoly::monomial(leg.power - j, leg.exponent))},
                        binomial(leg.power, j));
  }
  dfun.canonicalize();

  UTensor out = UTensor::from_legs({one(), one()});
  for (int i = 0; i < leg.k; ++i) out = multiply(out, dadag);
  out = multiply(out, dfun);
  for (int i = 0; i < leg.m; ++i) out = multiply(out, da);
  return out;
}

UTensor BosonAlgebra::coproduct(const UElement& u) const {
  UTensor out(2);
  for (const auto& [leg, c] : leg_terms(u)) {
    UTensor piece = coproduct_monomial(leg);
    for (const auto& [key, cc] : piece.terms()) out.add(key, c * cc);
  }
  out.canonicalize();
  return out;
}

UTensor BosonAlgebra::coproduct_on_leg(const UTensor& t, int leg) const {
  return map_leg(t, leg, [&](const LegMonomial& lm) { return coproduct_monomial(lm); });
}

UTensor BosonAlgebra::multiply(const UTensor& s, const UTensor& t) const {
  return tensor_multiply(s, t, [&](const UElement& x, const UElement& y) {
    return multiply(x, y);
  });
}

UElement BosonAlgebra::contract(const UTensor& t) const {
  return gboson::contract(t, [&](const UElement& x, const UElement& y) {
    return multiply(x, y);
  });
}

Complex BosonAlgebra::counit(const UElement& u) const {
  auto it = u.terms().find({0, 0});
  return it == u.terms().end() ? Complex(0.0) : it->second(0.0);
}

UElement BosonAlgebra::antipode_monomial(const LegMonomial& leg) const {
  // S(a) = -e^{-i pi Nt} q^{-alpha/2} a, S(a^dagger) = a^dagger e^{i pi Nt} q^{alpha/2}
  const UElement sa =
      UElement::term(0, 1, ExpPoly::exponential(-kI * kPi, -std::exp(-half_log_)));
  const UElement sadag =
      UElement::term(1, 0, ExpPoly::exponential(kI * kPi, std::exp(half_log_)));
  const UElement sf = function(ExpPoly::monomial(leg.power, leg.exponent).reflected());
  return multiply(multiply(power(sa, leg.m), sf), power(sadag, leg.k));
}

UElement BosonAlgebra::antipode(const UElement& u) const {
  UElement out;
  for (const auto& [leg, c] : leg_terms(u)) out += antipode_monomial(leg) * c;
  return out;
}

std::vector<CheckResult> BosonAlgebra::hopf_axioms(
    const std::vector<std::pair<std::string, UElement>>& elements) const {
  constexpr double kTol = 1e-12;
  std::vector<CheckResult> out;
  const auto as_tensor = [&](const LegMonomial& lm) {
    return UTensor::from_element(antipode_monomial(lm));
  };
  for (const auto& [name, u] : elements) {
    const UTensor du = coproduct(u);
    const UElement unit = one() * counit(u);

    const UElement left = contract(map_leg(du, 0, as_tensor)) - unit;
    const UElement right = contract(map_leg(du, 1, as_tensor)) - unit;
    out.push_back({"antipode_left(" + name + ")", left.max_abs_coeff(), kTol, ""});
    out.push_back({"antipode_right(" + name + ")", right.max_abs_coeff(), kTol, ""});

    const UTensor coassoc = coproduct_on_leg(du, 0) - coproduct_on_leg(du, 1);
    out.push_back({"coassociativity(" + name + ")", coassoc.max_abs_coeff(), kTol, ""});
  }
  return out;
}

}  // namespace gboson
