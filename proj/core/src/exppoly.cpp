#include "gboson/exppoly.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace gboson {

void cluster_exponents(std::vector<Complex*>& values) {
  std::vector<Complex> reps;
  for (Complex* v : values) {
    bool snapped = false;
    for (const Complex& r : reps) {
      if (*v == r) {
        snapped = true;
        break;
      }
      if (std::abs(*v - r) <= ExpPoly::kExponentTolerance) {
        *v = r;
        snapped = true;
        break;
      }
    }
    if (!snapped) reps.push_back(*v);
  }
}

ExpPoly::ExpPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
  canonicalize();
}

ExpPoly ExpPoly::constant(Complex c) { return monomial(0, 0.0, c); }

ExpPoly ExpPoly::monomial(int power, Complex exponent, Complex coeff) {
  if (power < 0) throw std::invalid_argument("ExpPoly power must be nonnegative");
  if (power > kMaxPower) throw std::overflow_error("ExpPoly power cap exceeded");
  return ExpPoly({Term{power, exponent, coeff}});
}

void ExpPoly::canonicalize() {
  std::vector<Complex*> exps;
  exps.reserve(terms_.size());
  for (Term& t : terms_) exps.push_back(&t.exponent);
  cluster_exponents(exps);

  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.exponent != b.exponent) return complex_less(a.exponent, b.exponent);
    return a.power < b.power;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent &&
        merged.back().power == t.power) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == Complex(0.0); });
  terms_ = std::move(merged);
}

bool ExpPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.exponent == Complex(0.0); });
}

int ExpPoly::max_power() const {
  int out = 0;
  for (const Term& t : terms_) out = std::max(out, t.power);
  return out;
}

double ExpPoly::max_abs_coeff() const {
  double out = 0.0;
  for (const Term& t : terms_) out = std::max(out, std::abs(t.coeff));
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) {
  for (Term t : other.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(t);
  }
  canonicalize();
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      const int power = a.power + b.power;
      if (power > kMaxPower) throw std::overflow_error("ExpPoly power cap exceeded");
      out.push_back({power, a.exponent + b.exponent, a.coeff * b.coeff});
    }
  }
  terms_ = std::move(out);
  canonicalize();
  return *this;
}

ExpPoly& ExpPoly::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

ExpPoly ExpPoly::shifted(Complex s) const {
  if (s == Complex(0.0)) return *this;
  // Accumulate each exponent group in extended precision; the binomial
  // re-expansion cancels heavily for shifts of modulus >> 1.
  using Wide = std::complex<long double>;
  const Wide ws(s.real(), s.imag());
  std::vector<Term> out;
  std::size_t begin = 0;
  while (begin < terms_.size()) {
    const Complex exponent = terms_[begin].exponent;
    std::size_t end = begin;
    int top = 0;
    while (end < terms_.size() && terms_[end].exponent == exponent) {
      top = std::max(top, terms_[end].power);
      ++end;
    }
    std::vector<Wide> powers(top + 1, Wide(1.0L));
    for (int j = 1; j <= top; ++j) powers[j] = powers[j - 1] * ws;
    const Wide phase = std::exp(Wide(exponent.real(), exponent.imag()) * ws);
    std::vector<Wide> acc(top + 1, Wide(0.0L));
    for (std::size_t i = begin; i < end; ++i) {
      const Term& t = terms_[i];
      const Wide scale = Wide(t.coeff.real(), t.coeff.imag()) * phase;
      // (t + s)^l = sum_j C(l, j) s^{l-j} t^j
      long double binom = 1.0L;
      for (int j = t.power; j >= 0; --j) {
        acc[j] += scale * binom * powers[t.power - j];
        binom = binom * j / (t.power - j + 1);
      }
    }
    for (int j = 0; j <= top; ++j) {
      out.push_back({j, exponent, Complex(double(acc[j].real()), double(acc[j].imag()))});
    }
    begin = end;
  }
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::reflected() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) {
    t.exponent = -t.exponent;
    if (t.power % 2 == 1) t.coeff = -t.coeff;
  }
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("ExpPoly::pow requires n >= 0");
  ExpPoly out = constant(1.0);
  for (int i = 0; i < n; ++i) out *= *this;
  return out;
}

Complex ExpPoly::operator()(Complex t) const {
  Complex sum = 0.0;
  for (const Term& term : terms_)
    sum += term.coeff * std::pow(t, term.power) * std::exp(term.exponent * t);
  return sum;
}

std::vector<Complex> ExpPoly::taylor_coefficients(int up_to) const {
  if (up_to < 0) throw std::invalid_argument("taylor_coefficients requires up_to >= 0");
  std::vector<Complex> out(up_to + 1, 0.0);
  for (const Term& t : terms_) {
    // t^l e^{lambda t}: coefficient of t^p is lambda^{p-l}/(p-l)!
    Complex c = t.coeff;
    for (int p = t.power; p <= up_to; ++p) {
      out[p] += c;
      c *= t.exponent / double(p - t.power + 1);
    }
  }
  return out;
}

bool approx_equal(const ExpPoly& a, const ExpPoly& b, double tol) {
  return (a - b).max_abs_coeff() <= tol;
}

}  // namespace gboson
