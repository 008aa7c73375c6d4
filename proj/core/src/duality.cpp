#include "gboson/duality.hpp"

#include <cmath>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "gboson/fockrep.hpp"
#include "gboson/qspecial.hpp"

namespace gboson {

namespace {

const Complex kI(0.0, 1.0);

int total(const BasisIndex& i) { return i.k + i.l + i.m; }

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

double relative(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

void PairingWindow::validate() const {
  for (int b : {max_k, max_l, max_m})
    if (b < 0 || b > 8) throw std::invalid_argument("pairing window bounds must lie in [0, 8]");
}

Duality::Duality(DeformationParams params) : boson_(params), dual_(params) {}

namespace {

// <F leg, U leg> for single PBW-like monomials.
Complex pair_leg(const DualAlgebra& dual, const LegMonomial& f, const LegMonomial& u,
                 const PairingWindow& window) {
  if (f.k != u.k || f.m != u.m) return 0.0;
  if (f.k > window.max_k || f.m > window.max_m)
    throw WindowInsufficient("pairing needs x/y degree outside the window");
  const bool f_finite = f.exponent == Complex(0.0) && f.power <= window.max_l;
  const bool u_finite = u.exponent == Complex(0.0) && u.power <= window.max_l;
  if (!f_finite && !u_finite)
    throw WindowInsufficient("pairing of two non-polynomial sectors is not finite in the window");
  const FElement fe = leg_element<FTag>(f);
  const auto fc = dual.basis_change(fe, window.max_l);
  const auto uc = ExpPoly::monomial(u.power, u.exponent).taylor_coefficients(window.max_l);
  Complex sum = 0.0;
  for (const auto& [idx, c] : fc) sum += c * uc[idx.l];
  return sum;
}

}  // namespace

Complex Duality::pair(const FElement& f, const UElement& u,
                      const PairingWindow& window) const {
  window.validate();
  Complex sum = 0.0;
  const auto ut = leg_terms(u);
  for (const auto& [fl, fc] : leg_terms(f))
    for (const auto& [ul, uc] : ut) sum += fc * uc * pair_leg(dual_, fl, ul, window);
  return sum;
}

Complex Duality::pair(const FTensor& f, const UTensor& u, const PairingWindow& window) const {
  window.validate();
  if (f.legs() != u.legs()) throw std::invalid_argument("tensor pairing needs equal leg counts");
  std::map<std::pair<LegMonomial, LegMonomial>, Complex> cache;
  const auto leg_value = [&](const LegMonomial& a, const LegMonomial& b) {
    if (a.k != b.k || a.m != b.m) return Complex(0.0);
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::pair{a, b}, pair_leg(dual_, a, b, window)).first;
    return it->second;
  };
  Complex sum = 0.0;
  for (const auto& [fk, fc] : f.terms()) {
    for (const auto& [uk, uc] : u.terms()) {
      Complex prod = fc * uc;
      for (int leg = 0; leg < f.legs() && prod != Complex(0.0); ++leg)
        prod *= leg_value(fk[leg], uk[leg]);
      sum += prod;
    }
  }
  return sum;
}

CheckResult Duality::pairing_orthonormality(int max_index) const {
  const PairingWindow window{std::max(max_index, 0), std::max(max_index, 0),
                             std::max(max_index, 0)};
  double worst = 0.0;
  for (int k = 0; k <= max_index; ++k)
    for (int l = 0; l <= max_index; ++l)
      for (int m = 0; m <= max_index; ++m) {
        const FElement e = dual_.dual_basis_e(k, l, m);
        for (int k2 = 0; k2 <= max_index; ++k2)
          for (int l2 = 0; l2 <= max_index; ++l2)
            for (int m2 = 0; m2 <= max_index; ++m2) {
              const Complex expected = (k == k2 && l == l2 && m == m2) ? 1.0 : 0.0;
              const Complex got = pair(e, boson_.basis_E(k2, l2, m2), window);
              worst = std::max(worst, std::abs(got - expected));
            }
      }
  return {"pairing <e^{klm}, E_{k'l'm'}> orthonormality", worst, 1e-12,
          "indices <= " + std::to_string(max_index)};
}

std::vector<CheckResult> Duality::duality_axiom_check(int samples, std::uint64_t seed,
                                                      const PairingWindow& window) const {
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(seed);
  const auto draw = [&] { return static_cast<int>(rng() % 3); };
  const auto f_mono = [&] {
    const int k = draw(), l = draw(), m = draw();
    return dual_.ordered(k, m, ExpPoly::monomial(l));
  };
  const auto u_mono = [&] {
    const int k = draw(), l = draw(), m = draw();
    return boson_.basis_E(k, l, m);
  };

  double prod_coprod = 0.0, coprod_prod = 0.0, counit_u = 0.0, counit_f = 0.0, antipode = 0.0;
  for (int s = 0; s < samples; ++s) {
    const FElement a = f_mono();
    const FElement b = f_mono();
    const UElement u = u_mono();
    const UElement v = u_mono();
    const int order = std::max(u.max_degree(), v.max_degree());

    prod_coprod = std::max(prod_coprod, relative(pair(dual_.multiply(a, b), u, window),
                                                 pair(FTensor::from_legs({a, b}),
                                                      boson_.coproduct(u), window)));
    coprod_prod = std::max(coprod_prod, relative(pair(a, boson_.multiply(u, v), window),
                                                 pair(dual_.coproduct(a, order),
                                                      UTensor::from_legs({u, v}), window)));
    counit_f = std::max(counit_f, relative(pair(a, boson_.one(), window), dual_.counit(a)));
    counit_u = std::max(counit_u, relative(pair(dual_.one(), u, window), boson_.counit(u)));
    antipode = std::max(antipode, relative(pair(a, boson_.antipode(u), window),
                                           pair(dual_.antipode(a, u.max_degree()), u, window)));
  }
  const std::string note = std::to_string(samples) + " samples, seed " + std::to_string(seed);
  return {
      {"duality <ab,u> = <a(x)b, D(u)>", prod_coprod, kTol, note},
      {"duality <a,uv> = <D(a), u(x)v>", coprod_prod, kTol, note},
      {"duality <a,1> = eps(a)", counit_f, kTol, note},
      {"duality <1,u> = eps(u)", counit_u, kTol, note},
      {"duality <a,S(u)> = <S(a),u>", antipode, kTol, note},
  };
}

TMatrixSeries Duality::tmatrix_series(int degree) const {
  TMatrixSeries out{degree, {}};
  for (int k = 0; k <= degree; ++k)
    for (int l = 0; k + l <= degree; ++l)
      for (int m = 0; k + l + m <= degree; ++m)
        out.terms.emplace_back(dual_.dual_basis_e(k, l, m), boson_.basis_E(k, l, m));
  return out;
}

TMatrixSeries Duality::tmatrix_closed(int degree) const {
  const double b = dual_.curly_base();
  const double half = 0.5 * boson_.params().alpha() * boson_.params().log_q();
  TMatrixSeries out{degree, {}};
  for (int k = 0; k <= degree; ++k)
    for (int l = 0; k + l <= degree; ++l)
      for (int m = 0; k + l + m <= degree; ++m) {
        const double norm = curly_factorial(k, b) * std::tgamma(l + 1.0) * curly_factorial(m, b);
        const FElement f = dual_.ordered(k, m, ExpPoly::monomial(l, 0.0, 1.0 / norm));
        const Complex rate = -double(k - m) * half - kI * (m * kPi);
        out.terms.emplace_back(f, UElement::term(k, m, ExpPoly::monomial(l, rate)));
      }
  return out;
}

double Duality::tmatrix_compare(int degree) const {
  std::map<std::pair<BasisIndex, BasisIndex>, Complex> aligned;
  for (const auto& [f, u] : tmatrix_closed(degree).terms) {
    const auto fc = dual_.basis_change(f, degree);
    const auto uc = boson_.e_coefficients(u, degree);
    for (const auto& [i, a] : fc) {
      if (total(i) > degree) continue;
      for (const auto& [j, c] : uc)
        if (total(j) <= degree) aligned[{i, j}] += a * c;
    }
  }
  double worst = 0.0;
  for (const auto& [f, u] : tmatrix_series(degree).terms) {
    (void)f;
    const BasisIndex i = boson_.e_coefficients(u, degree).begin()->first;
    if (!aligned.contains({i, i})) worst = std::max(worst, 1.0);
  }
  for (const auto& [ij, c] : aligned) {
    const Complex expected = ij.first == ij.second ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(c - expected));
  }
  return worst;
}

Eigen::MatrixXcd Duality::tmatrix_represented(int dfock, int dosc, int degree) const {
  if (dfock < 2 || dfock > 8 || dosc < 2 || dosc > 8)
    throw std::invalid_argument("represented T needs dimensions in [2, 8]");
  const DeformationParams& p = boson_.params();
  const FockSpace fock(p, dfock);
  const OscillatorRep osc = dual_.oscillator_rep(dosc);
  const double b = dual_.curly_base();
  const double half = 0.5 * p.alpha() * p.log_q();
  const long so = osc.x.rows();
  const long size = so * dfock;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
  for (int k = 0; k <= degree; ++k) {
    const Eigen::MatrixXcd left = Eigen::kroneckerProduct(
        matrix_power(osc.x, k), matrix_power(fock.adag().matrix, k)).eval();
    for (int m = 0; k + m <= degree; ++m) {
      const Eigen::MatrixXcd right = Eigen::kroneckerProduct(
          matrix_power(osc.y, m), matrix_power(fock.a().matrix, m)).eval();
      const Complex w = double(k - m) * half + kI * (m * kPi);
      Eigen::VectorXcd diag(size);
      for (long s = 0; s < so; ++s)
        for (int n = 0; n < dfock; ++n)
          diag(s * dfock + n) = std::exp((osc.z(s, s) - w) * fock.ntilde_value(n));
      out += left * diag.asDiagonal() * right / (curly_factorial(k, b) * curly_factorial(m, b));
    }
  }
  return out;
}

CheckResult Duality::grouplike_check(int dfock, int dosc, int degree) const {
  const DeformationParams& p = boson_.params();
  if (dosc < 2 || dosc > 8) throw std::invalid_argument("represented T needs dimensions in [2, 8]");
  // Every operator involved lowers or keeps the oscillator occupations, so
  // levels above the degree never reach the tested columns.
  const int levels = std::max(2, std::min(dosc, degree + 1));
  const FockSpace fock(p, dfock);
  const OscillatorRep osc = dual_.oscillator_rep(levels);
  const double b = dual_.curly_base();
  const double half = 0.5 * p.alpha() * p.log_q();
  const long so = osc.x.rows();      // one oscillator copy
  const long sp = so * so;           // two copies
  const long size = sp * dfock;
  const Eigen::MatrixXcd t = tmatrix_represented(dfock, levels, degree);

  // Coproducts of x, y, z on the two copies; every term of the full series
  // that survives the truncated space is included.
  const int series = 2 * levels;
  const Eigen::MatrixXcd dx = dual_.represent(dual_.coproduct_generator(Generator::X, series), osc);
  const Eigen::MatrixXcd dy = dual_.represent(dual_.coproduct_generator(Generator::Y, series), osc);
  const Eigen::MatrixXcd dz = dual_.represent(dual_.coproduct_generator(Generator::Z, series), osc);
  std::vector<Eigen::MatrixXcd> exp_dz(dfock);
  for (int n = 0; n < dfock; ++n) exp_dz[n] = (dz * Complex(fock.ntilde_value(n))).exp();
  std::vector<Eigen::MatrixXcd> dx_pow{Eigen::MatrixXcd::Identity(sp, sp)};
  std::vector<Eigen::MatrixXcd> dy_pow{Eigen::MatrixXcd::Identity(sp, sp)};
  for (int i = 1; i <= degree; ++i) {
    dx_pow.push_back(dx_pow.back() * dx);
    dy_pow.push_back(dy_pow.back() * dy);
  }
  const Eigen::MatrixXcd& fa = fock.a().matrix;
  const Eigen::MatrixXcd& fadag = fock.adag().matrix;

  const auto index = [&](long s1, long s2, long n) { return (s1 * so + s2) * dfock + n; };
  double worst = 0.0;
  double scale = 1.0;
  long columns = 0;
  for (int a1 = 0; a1 < levels; ++a1)
    for (int b1 = 0; b1 < levels; ++b1)
      for (int a2 = 0; a2 < levels; ++a2)
        for (int b2 = 0; b2 < levels; ++b2) {
          if (a1 + b1 + a2 + b2 > degree) continue;
          const long s1 = a1 * levels + b1, s2 = a2 * levels + b2;
          for (int n = 0; n + a1 + a2 <= dfock - 1; ++n) {
            ++columns;
            // Left side: T_13 (T_23 e_c).
            Eigen::VectorXcd mid = Eigen::VectorXcd::Zero(size);
            for (long r2 = 0; r2 < so; ++r2)
              for (int rn = 0; rn < dfock; ++rn)
                mid(index(s1, r2, rn)) = t(r2 * dfock + rn, s2 * dfock + n);
            Eigen::VectorXcd lhs = Eigen::VectorXcd::Zero(size);
            for (long r1 = 0; r1 < so; ++r1)
              for (long r2 = 0; r2 < so; ++r2)
                for (int rn = 0; rn < dfock; ++rn) {
                  Complex acc = 0.0;
                  for (int cn = 0; cn < dfock; ++cn)
                    acc += t(r1 * dfock + rn, s1 * dfock + cn) * mid(index(s1, r2, cn));
                  lhs(index(r1, r2, rn)) = acc;
                }
            // Right side: sum_{k,m} (Dx^k (x) a^dagger^k) e^{(Dz - w) Ntilde} (Dy^m (x) a^m).
            Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(size);
            const long sc = s1 * so + s2;
            for (int k = 0; k <= degree; ++k)
              for (int m = 0; k + m <= degree && m <= n; ++m) {
                Eigen::VectorXcd fock_in = Eigen::VectorXcd::Zero(dfock);
                fock_in(n) = 1.0;
                fock_in = matrix_power(fa, m) * fock_in;
                const int n1 = n - m;
                const Complex w = double(k - m) * half + kI * (m * kPi);
                Eigen::VectorXcd osc_vec = exp_dz[n1] * dy_pow[m].col(sc) *
                                           (fock_in(n1) * std::exp(-w * fock.ntilde_value(n1)));
                osc_vec = dx_pow[k] * osc_vec;
                Eigen::VectorXcd fock_out = Eigen::VectorXcd::Zero(dfock);
                fock_out(n1) = 1.0;
                fock_out = matrix_power(fadag, k) * fock_out;
                const double norm = curly_factorial(k, b) * curly_factorial(m, b);
                for (long r = 0; r < sp; ++r)
                  for (int rn = 0; rn < dfock; ++rn)
                    rhs(r * dfock + rn) += osc_vec(r) * fock_out(rn) / norm;
              }
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
            scale = std::max(scale, lhs.cwiseAbs().maxCoeff());
          }
        }
  return {"T group-like T13 T23 = T_{D(e),E}", worst, 1e-6,
          std::to_string(columns) + " exact columns, max entry " + std::to_string(scale)};
}

}  // namespace gboson
