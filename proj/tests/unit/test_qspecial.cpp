#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gboson/qspecial.hpp"

using namespace gboson;

namespace {

const DeformationParams kP(1.3, 2.0, 1.0);
const DeformationParams kClassical(1.0 + 1e-8, 2.0, 1.0);

double bracket(double x, double q) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q); }

}  // namespace

TEST(DeformationParams, RejectsInvalidInput) {
  EXPECT_THROW(DeformationParams(0.0, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(DeformationParams(-1.0, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(DeformationParams(1.3, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(DeformationParams(1.3, 2.0, 1.0, 1e-3), std::invalid_argument);
}

TEST(DeformationParams, GuardSubstitutesNearOne) {
  EXPECT_TRUE(kClassical.guarded());
  EXPECT_DOUBLE_EQ(kClassical.effective_q(), 1.0 + DeformationParams::kDefaultGuard);
  const DeformationParams below(1.0 - 1e-9, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(below.effective_q(), 1.0 - DeformationParams::kDefaultGuard);
  EXPECT_FALSE(kP.guarded());
}

TEST(QNumber, Examples) {
  EXPECT_DOUBLE_EQ(q_number(0.0, kP), 0.0);
  EXPECT_NEAR(q_number(1.0, kP), 1.0, 1e-15);
  const DeformationParams p3(3.0, 1.0, 0.0);
  EXPECT_NEAR(q_number(-2.0, p3), -10.0 / 3.0, 1e-14);
  EXPECT_NEAR(q_number(2.5, kP), bracket(2.5, 1.3), 1e-13);
}

TEST(QNumber, OddAndInversionSymmetric) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(-6.0, 6.0);
  const DeformationParams inverse(1.0 / 1.3, 2.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = xs(rng);
    EXPECT_NEAR(q_number(-x, kP), -q_number(x, kP), 1e-12);
    EXPECT_NEAR(q_number(x, inverse), q_number(x, kP), 1e-11 * std::max(1.0, std::abs(q_number(x, kP))));
  }
}

TEST(QNumber, ClassicalGuardReturnsArgument) {
  EXPECT_NEAR(q_number(3.5, kClassical), 3.5, 1e-9);
}

TEST(CurlyNumber, Examples) {
  EXPECT_DOUBLE_EQ(curly_factorial(0, 2.0), 1.0);
  EXPECT_NEAR(curly_number(1, 2.0), 1.0, 1e-15);
  EXPECT_NEAR(curly_number(2, 4.0), 1.5, 1e-15);
  EXPECT_NEAR(curly_factorial(3, 4.0), 1.0 * 1.5 * curly_number(3, 4.0), 1e-14);
}

TEST(BoxNumber, Examples) {
  EXPECT_NEAR(box_number(0, kP), 0.0, 1e-15);
  EXPECT_NEAR(box_number(1, kP), q_number(kP.beta(), kP), 1e-14);
  EXPECT_DOUBLE_EQ(box_factorial(0, kP), 1.0);
}

TEST(BoxNumber, AdjacentSumIsBracket) {
  for (const DeformationParams& p : {kP, DeformationParams(0.7, 1.5, 0.4), DeformationParams(2.0, 1.0, 3.0)}) {
    for (int n = 0; n <= 32; ++n) {
      const double expected = q_number(p.alpha() * n + p.beta(), p);
      EXPECT_NEAR(box_number(n, p) + box_number(n + 1, p), expected, 1e-12 * std::max(1.0, std::abs(expected)))
          << "n = " << n << " " << p.describe();
    }
  }
}

TEST(BoxNumber, NegativeArgumentUsesReflectedParameters) {
  const DeformationParams reflected = kP.reflected();
  EXPECT_DOUBLE_EQ(reflected.alpha(), -kP.alpha());
  EXPECT_DOUBLE_EQ(reflected.beta(), kP.beta() - kP.alpha());
  for (int n = 0; n <= 16; ++n) {
    EXPECT_NEAR(box_number(-n, kP), box_number(n, reflected), 1e-12 * std::max(1.0, std::abs(box_number(n, reflected))));
  }
}

TEST(BoxNumber, ClassicalLimit) {
  double factorial = 1.0;
  for (int n = 1; n <= 10; ++n) {
    factorial *= n;
    EXPECT_NEAR(box_number(n, kClassical), n, 1e-6 * n);
    EXPECT_NEAR(box_factorial(n, kClassical) / factorial, 1.0, 1e-6 * n);
  }
}

TEST(Sigma, Examples) {
  EXPECT_DOUBLE_EQ(sigma(1, kP), 1.0);
  EXPECT_NEAR(sigma(2, kP), q_number(kP.alpha(), kP), 1e-14);
  EXPECT_NEAR(sigma(3, kClassical), 4.0, 1e-4);
  EXPECT_THROW(sigma(0, kP), std::domain_error);
}

TEST(Sigma, ProductRecurrence) {
  for (int m = 1; m <= 12; ++m) {
    double factor = 0.0;
    for (int l = 0; l < m; ++l) factor += (l % 2 == 0 ? 1.0 : -1.0) * q_number((m - l) * kP.alpha(), kP);
    const double expected = sigma(m, kP) * factor;
    EXPECT_NEAR(sigma(m + 1, kP), expected, 1e-12 * std::abs(expected)) << "m = " << m;
  }
}

TEST(FloorBracket, Examples) {
  EXPECT_DOUBLE_EQ(floor_bracket(0, 2.0), 0.0);
  EXPECT_NEAR(floor_bracket(1, 2.0), 1.0, 1e-15);
  EXPECT_NEAR(floor_bracket(2, 2.0), -1.0, 1e-15);
  EXPECT_THROW(floor_binomial(2, 3, 0.5), std::domain_error);
  EXPECT_THROW(floor_binomial(2, -1, 0.5), std::domain_error);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_NEAR(floor_binomial(n, 0, 0.6), 1.0, 1e-14);
    EXPECT_NEAR(floor_binomial(n, n, 0.6), 1.0, 1e-14);
  }
}

TEST(FloorBracket, BinomialMatchesFactorialRatio) {
  const double b = 0.6;
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      const double expected =
          floor_factorial(n, b) / (floor_factorial(k, b) * floor_factorial(n - k, b));
      EXPECT_NEAR(floor_binomial(n, k, b), expected, 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST(ShiftedFactorial, Examples) {
  EXPECT_EQ(q_shifted_factorial(Complex(0.3, 0.2), 0.5, 0), Complex(1.0));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(q_shifted_factorial(1.0, 0.7, n), Complex(0.0));
  EXPECT_NEAR(std::abs(q_shifted_factorial(0.5, 0.5, 2) - 0.375), 0.0, 1e-15);
}

TEST(DeformedExp, Examples) {
  EXPECT_EQ(deformed_exp(0.0, kP), Complex(1.0));
  EXPECT_NEAR(deformed_exp(1.0, kClassical).real(), std::exp(1.0), 1e-6);
  EXPECT_GT(deformed_exp(-3.0, kP).real(), 0.0);
  EXPECT_NEAR(deformed_exp(-3.0, kP).imag(), 0.0, 0.0);
}

TEST(DeformedExp, MatchesDirectSeries) {
  const double x = 0.8;
  double sum = 0.0;
  for (int n = 0; n < 60; ++n) sum += std::pow(x, n) / box_factorial(n, kP);
  EXPECT_NEAR(deformed_exp(x, kP).real(), sum, 1e-13);
}

TEST(DeformedExp, ReportsNonConvergence) {
  ScalarSeriesBudget tight;
  tight.max_terms = 3;
  try {
    deformed_exp(5.0, kP, tight);
    FAIL() << "expected SeriesNotConverged";
  } catch (const SeriesNotConverged& e) {
    EXPECT_GT(e.last_term(), tight.tail_tolerance);
    EXPECT_GT(std::abs(e.partial_sum()), 1.0);
  }
}

TEST(CalExp, MatchesDirectSeries) {
  const double b = std::pow(1.3, 2.0);
  EXPECT_EQ(cal_exp(0.0, b), Complex(1.0));
  const Complex x(0.4, -0.3);
  Complex sum = 0.0;
  for (int n = 0; n < 40; ++n) sum += std::pow(x, n) / curly_factorial(n, b);
  EXPECT_NEAR(std::abs(cal_exp(x, b) - sum), 0.0, 1e-14);
}

TEST(CkCoefficients, PrintedClosedForms) {
  for (const DeformationParams& p : {kP, DeformationParams(1.7, 1.5, 0.7), DeformationParams(1.2, 2.0, 1.0),
                                     DeformationParams(0.8, 1.0, 2.0)}) {
    const auto qn = [&](double x) { return q_number(x, p); };
    const auto bb = [&](double x) { return p.double_bracket(x); };
    const double a = p.alpha(), b = p.beta();
    const auto c = ck_coefficients(3, p);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_NEAR(c[0], 1.0 / qn(b), 1e-12);
    EXPECT_NEAR(c[1], 1.0 / (qn(a) * qn(b) * bb(b + a / 2)) - 1.0 / (2 * qn(b) * qn(b)), 1e-12);
    EXPECT_NEAR(c[2],
                1.0 / (qn(a) * qn(b) * qn(a + b) * bb(1.5 * a) * bb(b + a / 2)) -
                    1.0 / (qn(a) * qn(b) * qn(b) * bb(b + a / 2)) + 1.0 / (3 * qn(b) * qn(b) * qn(b)),
                1e-12);
  }
}

TEST(CkCoefficients, ClassicalLimit) {
  const auto c = ck_coefficients(3, kClassical);
  EXPECT_NEAR(c[0], 1.0, 1e-5);
  EXPECT_NEAR(c[1], 0.0, 1e-5);
  EXPECT_NEAR(c[2], 0.0, 1e-5);
}

TEST(CkCoefficients, ExponentiatedSeriesInsideConvergenceDisk) {
  const auto c = ck_coefficients(120, kP);
  for (double x = -3.0; x <= 3.0; x += 0.25) {
    double s = 0.0;
    for (int k = 120; k >= 1; --k) s = s * x + c[k - 1];
    const double expected = deformed_exp(x, kP).real();
    EXPECT_NEAR(std::exp(s * x), expected, 1e-8 * expected) << "x = " << x;
  }
}

TEST(CkCoefficients, LogSeriesRadiusIsFinite) {
  // |c_k|^{1/k} settles near 0.27 at (1.3, 2, 1): the product form only
  // holds for |x| below about 3.7.
  const auto c = ck_coefficients(80, kP);
  const double root = std::pow(std::abs(c[79]), 1.0 / 80.0);
  EXPECT_GT(root, 0.25);
  EXPECT_LT(root, 0.30);
}

TEST(AnalyticBox, IntegerArgumentsReduceToBoxNumbers) {
  for (int n = 0; n <= 6; ++n)
    for (int sign : {1, -1}) {
      EXPECT_NEAR(std::abs(box_number_analytic(Complex(n), sign, kP) - box_number(n, kP)), 0.0,
                  1e-12 * std::max(1.0, box_number(n, kP)));
    }
}

TEST(PoleWeight, EpsilonLimitAverage) {
  for (const DeformationParams& p : {kP, DeformationParams(1.2, 2.0, 1.0), DeformationParams(1.5, 1.0, 0.3)}) {
    const double eps = 1e-6;
    const auto [plus, minus] = epsilon_limit_check(eps, p);
    const Complex average = 0.5 * (eps / plus + eps / minus);
    const double weight = pole_weight(p);
    EXPECT_NEAR(std::abs(average - weight) / std::abs(weight), 0.0, 1e-4) << p.describe();
  }
  EXPECT_THROW(epsilon_limit_check(0.0, kP), std::invalid_argument);
}

TEST(PoleWeight, HalfAlphaBeta) {
  const DeformationParams p(1.4, 2.0, 1.0);  // beta = alpha / 2
  const double expected = 1.0 / (p.alpha() * p.double_bracket(0.0) * p.log_q() / p.q_minus_inverse());
  EXPECT_NEAR(pole_weight(p), expected, 1e-14 * expected);
}

TEST(GammaResidue, IteratedRelation) {
  EXPECT_NEAR(gamma_residue(0, kP), pole_weight(kP), 1e-15);
  EXPECT_NEAR(gamma_residue(1, kP), pole_weight(kP) / box_number(-1, kP), 1e-14);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_NEAR(gamma_residue(n, kP) * box_number(-n, kP), gamma_residue(n - 1, kP),
                1e-12 * std::abs(gamma_residue(n - 1, kP)));
  }
}

TEST(GammaResidue, ClassicalValues) {
  double factorial = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) factorial *= n;
    const double expected = (n % 2 == 0 ? 1.0 : -1.0) / factorial;
    EXPECT_NEAR(gamma_residue(n, kClassical), expected, 1e-5) << "n = " << n;
  }
}
